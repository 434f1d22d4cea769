#include "rbc/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

#include "rbc/errors.hpp"

namespace rbc {
namespace {

struct TrialPoint {
    double mean_soc = 0.0;
    double dead_frac = 0.0;
    double full_frac = 0.0;
};

// State at a checkpoint of one finished run. A run that ended before the
// checkpoint holds its final state.
TrialPoint trial_point_at(const Trace& trace, double checkpoint_hours,
                          std::size_t n_receivers) {
    const auto wanted = static_cast<std::size_t>(
        std::llround(checkpoint_hours * 3600.0 / trace.slot_seconds));
    const std::vector<double>* soc = nullptr;
    if (trace.slots.empty()) {
        soc = &trace.initial_soc;
    } else {
        const std::size_t idx = std::min(wanted, trace.slots.size());
        soc = idx == 0 ? &trace.initial_soc : &trace.slots[idx - 1].soc;
    }
    TrialPoint point;
    for (double s : *soc) {
        point.mean_soc += s;
        if (s == 0.0) point.dead_frac += 1.0;
        if (s == 1.0) point.full_frac += 1.0;
    }
    const auto n = static_cast<double>(n_receivers);
    point.mean_soc /= n;
    point.dead_frac /= n;
    point.full_frac /= n;
    return point;
}

}  // namespace

std::vector<CheckpointStats> run_trials(const SchedulerConfig& point,
                                        const std::vector<double>& checkpoints_hours,
                                        int trials, std::uint64_t master_seed,
                                        int threads) {
    if (trials < 1) throw ConfigError("run_trials: trials must be >= 1");
    if (checkpoints_hours.empty()) {
        throw ConfigError("run_trials: need at least one checkpoint");
    }

    const auto n_checkpoints = checkpoints_hours.size();
    std::vector<std::vector<TrialPoint>> per_trial(
        static_cast<std::size_t>(trials));

    auto run_one = [&](int trial) {
        Trace trace = run_simulation(point, master_seed,
                                     static_cast<std::uint64_t>(trial));
        std::vector<TrialPoint> points;
        points.reserve(n_checkpoints);
        for (double cp : checkpoints_hours) {
            points.push_back(trial_point_at(
                trace, cp, static_cast<std::size_t>(point.receiver_count)));
        }
        per_trial[static_cast<std::size_t>(trial)] = std::move(points);
    };

    int worker_count = threads > 0
                           ? threads
                           : static_cast<int>(std::thread::hardware_concurrency());
    worker_count = std::max(1, std::min(worker_count, trials));

    if (worker_count == 1) {
        for (int t = 0; t < trials; ++t) run_one(t);
    } else {
        std::atomic<int> next{0};
        std::exception_ptr failure;
        std::mutex failure_mutex;
        auto worker = [&] {
            for (;;) {
                const int t = next.fetch_add(1);
                if (t >= trials) return;
                try {
                    run_one(t);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                    return;
                }
            }
        };
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(worker_count));
        for (int w = 0; w < worker_count; ++w) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
        if (failure) std::rethrow_exception(failure);
    }

    // Fixed-order reduction over trial index.
    std::vector<CheckpointStats> stats(n_checkpoints);
    for (std::size_t c = 0; c < n_checkpoints; ++c) {
        double sum = 0.0;
        for (const auto& points : per_trial) sum += points[c].mean_soc;
        const double mean = sum / trials;
        double sq = 0.0;
        double dead = 0.0;
        double full = 0.0;
        for (const auto& points : per_trial) {
            const double d = points[c].mean_soc - mean;
            sq += d * d;
            dead += points[c].dead_frac;
            full += points[c].full_frac;
        }
        stats[c].mean_soc = mean;
        stats[c].std_soc = trials > 1 ? std::sqrt(sq / (trials - 1)) : 0.0;
        stats[c].dead_frac = dead / trials;
        stats[c].full_frac = full / trials;
    }
    return stats;
}

std::vector<AggregateResult> time_sweep(const SweepConfig& config) {
    std::vector<AggregateResult> rows;
    for (FitVariant variant : config.variants) {
        for (int n_r : config.receiver_counts) {
            SchedulerConfig point = config.base;
            point.variant = variant;
            point.receiver_count = n_r;
            point.time_limit_hours = *std::max_element(
                config.checkpoints_hours.begin(), config.checkpoints_hours.end());
            const auto stats = run_trials(point, config.checkpoints_hours,
                                          config.trials, config.master_seed,
                                          config.threads);
            for (std::size_t c = 0; c < stats.size(); ++c) {
                AggregateResult row;
                row.n_receivers = n_r;
                row.checkpoint_hours = config.checkpoints_hours[c];
                row.transmit_power_w = point.transmit_power_w;
                row.variant = variant;
                row.mean_soc = stats[c].mean_soc;
                row.std_soc = stats[c].std_soc;
                row.dead_frac = stats[c].dead_frac;
                row.full_frac = stats[c].full_frac;
                row.trials = config.trials;
                rows.push_back(row);
            }
        }
    }
    std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
        if (a.n_receivers != b.n_receivers) return a.n_receivers < b.n_receivers;
        if (a.checkpoint_hours != b.checkpoint_hours)
            return a.checkpoint_hours < b.checkpoint_hours;
        return static_cast<int>(a.variant) < static_cast<int>(b.variant);
    });
    return rows;
}

std::vector<AggregateResult> power_sweep(const SweepConfig& config) {
    const double horizon = *std::max_element(config.checkpoints_hours.begin(),
                                             config.checkpoints_hours.end());
    const std::vector<double> final_only{horizon};
    std::vector<AggregateResult> rows;
    for (FitVariant variant : config.variants) {
        for (int n_r : config.receiver_counts) {
            for (double p_t : config.transmit_powers) {
                SchedulerConfig point = config.base;
                point.variant = variant;
                point.receiver_count = n_r;
                point.transmit_power_w = p_t;
                point.time_limit_hours = horizon;
                const auto stats = run_trials(point, final_only, config.trials,
                                              config.master_seed, config.threads);
                AggregateResult row;
                row.n_receivers = n_r;
                row.checkpoint_hours = horizon;
                row.transmit_power_w = p_t;
                row.variant = variant;
                row.mean_soc = stats[0].mean_soc;
                row.std_soc = stats[0].std_soc;
                row.dead_frac = stats[0].dead_frac;
                row.full_frac = stats[0].full_frac;
                row.trials = config.trials;
                rows.push_back(row);
            }
        }
    }
    std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
        if (a.n_receivers != b.n_receivers) return a.n_receivers < b.n_receivers;
        if (a.transmit_power_w != b.transmit_power_w)
            return a.transmit_power_w < b.transmit_power_w;
        return static_cast<int>(a.variant) < static_cast<int>(b.variant);
    });
    return rows;
}

FitValidationReport validate_fits(const BatterySpec& spec,
                                  const ProfileParams& params) {
    const ChargeProfile profile = synthesize_cc_cv_profile(spec, params);
    const StandardPairs pairs = standard_pairs(profile);

    FitValidationReport report;
    bool any_fail = false;
    bool any_warn = false;
    for (FitVariant variant : {FitVariant::R44, FitVariant::R45}) {
        const auto& coeffs = coefficients_for(variant);
        FitValidationEntry entry;
        entry.variant = variant;
        entry.rmse = fit_rmse(coeffs, pairs);
        const auto errors = fit_square_errors(coeffs, pairs);
        entry.max_square_error = *std::max_element(errors.begin(), errors.end());

        StandardPairs self_pairs;
        self_pairs.reserve(pairs.size());
        for (const auto& pair : pairs) {
            self_pairs.push_back({pair.energy, eval_rational_fit(coeffs, pair.energy)});
        }
        entry.self_pairs_zero = fit_rmse(coeffs, self_pairs) == 0.0;

        if (entry.rmse < 0.1) {
            entry.status = "pass";
        } else if (entry.rmse < 0.2) {
            entry.status = "warn";
            any_warn = true;
        } else {
            entry.status = "fail";
            any_fail = true;
        }
        if (!entry.self_pairs_zero) any_fail = true;
        report.entries.push_back(entry);
    }
    report.overall = any_fail ? "fail" : (any_warn ? "warn" : "pass");
    return report;
}

std::string format_validation_report(const FitValidationReport& report) {
    std::ostringstream out;
    for (const auto& entry : report.entries) {
        out << "fit " << variant_name(entry.variant) << ": rmse " << entry.rmse
            << " W, max square error " << entry.max_square_error << " W^2, status "
            << entry.status << "\n";
        out << "fit " << variant_name(entry.variant)
            << ": rmse on pairs generated from the fit itself = "
            << (entry.self_pairs_zero ? "0 (ok)" : "nonzero (BROKEN)") << "\n";
    }
    out << "overall: " << report.overall << "\n";
    return out.str();
}

}  // namespace rbc
