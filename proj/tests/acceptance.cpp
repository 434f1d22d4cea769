// Acceptance suite: runs every release gate end to end and prints one
// PASS/FAIL line per criterion. Exits nonzero if any gate fails.

#include <array>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "rbc/csv.hpp"
#include "rbc/discharge.hpp"
#include "rbc/harness.hpp"
#include "rbc/link.hpp"
#include "rbc/rational_fit.hpp"
#include "rbc/scheduler.hpp"
#include "reference_scheduler.hpp"

namespace {

int failures = 0;

void report(int id, const std::string& name, bool pass, const std::string& details) {
    std::printf("[%s] criterion %2d: %s — %s\n", pass ? "PASS" : "FAIL", id,
                name.c_str(), details.c_str());
    std::fflush(stdout);
    if (!pass) ++failures;
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

void criterion_1_efficiency_chain() {
    const rbc::LinkEfficiencies eff{};
    const double overall = rbc::overall_efficiency(eff);
    const auto chain = rbc::power_chain(50.0, eff);
    const bool pass = overall == 0.20 && chain.receiver_electrical == 10.0;
    report(1, "efficiency chain", pass,
           "overall=" + fmt(overall) + " P_e(50W)=" + fmt(chain.receiver_electrical));
}

void criterion_2_fit_point_values() {
    const rbc::BatterySpec spec;
    const double p44 = rbc::preferred_power(rbc::FitVariant::R44, 0.60, spec);
    const double p45 = rbc::preferred_power(rbc::FitVariant::R45, 0.60, spec);
    const double e60 = rbc::soc_to_energy(0.60, spec);
    const bool pass = std::abs(p44 - 3.8650) < 5e-3 && std::abs(p45 - 3.8712) < 5e-3 &&
                      std::abs(e60 - 3.8319) < 1e-4;
    report(2, "fit point values", pass,
           "P_r44(60%)=" + fmt(p44) + " P_r45(60%)=" + fmt(p45) +
               " E_r(60%)=" + fmt(e60));
}

void criterion_3_fit_scan() {
    const rbc::BatterySpec spec;
    bool finite = true;
    bool nonneg = true;
    double max_diff = 0.0;
    for (int i = 0; i <= 10000; ++i) {
        const double x = spec.total_energy * i / 10000.0;
        double f44 = 0.0;
        double f45 = 0.0;
        try {
            f44 = rbc::eval_rational_fit(rbc::r44_coefficients(), x);
            f45 = rbc::eval_rational_fit(rbc::r45_coefficients(), x);
        } catch (const std::exception&) {
            finite = false;
            break;
        }
        finite = finite && std::isfinite(f44) && std::isfinite(f45);
        nonneg = nonneg &&
                 rbc::preferred_power_at_energy(rbc::FitVariant::R44, x, spec) >= 0.0 &&
                 rbc::preferred_power_at_energy(rbc::FitVariant::R45, x, spec) >= 0.0;
        max_diff = std::max(max_diff, std::abs(f44 - f45));
    }
    const bool pass = finite && nonneg && max_diff < 0.25;
    report(3, "fit scan over [0, E_o]", pass,
           std::string("finite=") + (finite ? "yes" : "no") +
               " nonneg=" + (nonneg ? "yes" : "no") + " max|R44-R45|=" +
               fmt(max_diff));
}

void criterion_4_allocation_oracle() {
    // hand-traced allocation walks
    const auto split = rbc::allocate_slot({3.0, 2.5, 4.0}, 5.0);
    bool pass = split.allocations == std::vector<double>{3.0, 2.0, 0.0} &&
                split.served_count == 2;
    const auto exact = rbc::allocate_slot({3.0, 2.5}, 5.5);
    pass = pass && exact.allocations == std::vector<double>{3.0, 2.5} &&
           exact.served_count == 2;

    // scheduler vs. independent reference evaluator, small instances
    const std::vector<std::vector<double>> soc_sets = {
        {0.5}, {0.9, 0.05}, {1.0, 0.5}, {0.5, 0.5, 0.5}, {0.02, 0.6, 0.9},
        {0.3, 1.0, 0.7}, {0.01, 0.01, 0.01}};
    const std::vector<double> powers = {0.0001, 2.0, 3.3, 5.0, 20.0};
    int instances = 0;
    int mismatches = 0;
    for (const auto& socs : soc_sets) {
        for (double p_t : powers) {
            for (bool use_r45 : {false, true}) {
                for (bool strict : {false, true}) {
                    for (double eta : {0.5, 1.0}) {
                        for (auto status : {rbc::WorkingStatus::Standby,
                                            rbc::WorkingStatus::Game}) {
                            rbc::SchedulerConfig config;
                            config.receiver_count = static_cast<int>(socs.size());
                            config.initial_soc = socs;
                            config.transmit_power_w = p_t;
                            config.delivery_efficiency = eta;
                            config.variant = use_r45 ? rbc::FitVariant::R45
                                                     : rbc::FitVariant::R44;
                            config.termination =
                                strict ? rbc::TerminationMode::Strict
                                       : rbc::TerminationMode::Continue;
                            config.forced_status = status;
                            config.time_limit_hours = 300.0 / 3600.0;

                            refsched::RefConfig ref;
                            ref.n = config.receiver_count;
                            ref.transmit_power = p_t;
                            ref.limit_hours = config.time_limit_hours;
                            ref.strict = strict;
                            ref.use_r45 = use_r45;
                            ref.eta = eta;
                            ref.initial_soc = socs;
                            ref.discharge_watts = rbc::discharge_power(status);

                            if (!(rbc::run_simulation(config, 5) ==
                                  refsched::ref_run(ref))) {
                                ++mismatches;
                            }
                            ++instances;
                        }
                    }
                }
            }
        }
    }
    pass = pass && mismatches == 0;
    report(4, "allocation + slot-loop oracle", pass,
           std::to_string(instances) + " instances, " +
               std::to_string(mismatches) + " trace mismatches");
}

void criterion_5_conservation_property() {
    rbc::RngStream rng(20260808, 0);
    int checked = 0;
    int violations = 0;
    for (int round = 0; round < 10000; ++round) {
        const std::size_t n = 1 + rng.next_below(25);
        std::vector<double> preferred;
        double demand = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double p = rng.next_below(8) == 0 ? 0.0 : 6.0 * rng.next_unit();
            preferred.push_back(p);
            demand += p;
        }
        const double budget = 50.0 * rng.next_unit();
        const auto result = rbc::allocate_slot(preferred, budget);

        double total = 0.0;
        bool starved = false;
        bool ok = true;
        for (std::size_t i = 0; i < n; ++i) {
            total += result.allocations[i];
            if (result.allocations[i] > preferred[i]) ok = false;
            if (preferred[i] > 0.0 && result.allocations[i] == 0.0) starved = true;
            else if (starved && result.allocations[i] > 0.0) ok = false;
        }
        if (std::abs(total - std::min(budget, demand)) > 1e-9) ok = false;
        if (!ok) ++violations;
        ++checked;
    }
    report(5, "per-slot conservation property", violations == 0,
           std::to_string(checked) + " random instances, " +
               std::to_string(violations) + " violations");
}

struct SweepTables {
    std::vector<rbc::AggregateResult> time_rows;
    std::vector<rbc::AggregateResult> power_rows;
};

SweepTables run_reference_sweeps() {
    rbc::SweepConfig config;
    config.base.transmit_power_w = 20.0;
    config.base.termination = rbc::TerminationMode::Continue;
    config.trials = 200;
    config.master_seed = 1;
    SweepTables tables;
    tables.time_rows = rbc::time_sweep(config);
    tables.power_rows = rbc::power_sweep(config);
    return tables;
}

double lookup_time(const SweepTables& t, int n, double cp) {
    for (const auto& row : t.time_rows) {
        if (row.n_receivers == n && row.checkpoint_hours == cp) return row.mean_soc;
    }
    return -1.0;
}

void criterion_6_threshold(const SweepTables& tables) {
    int crossover = -1;
    for (int n : {10, 15, 20, 25, 30, 35, 40, 45, 50}) {
        if (lookup_time(tables, n, 3.0) < lookup_time(tables, n, 1.0)) {
            crossover = n;
            break;
        }
    }
    const bool pass = crossover >= 30 && crossover <= 40;
    report(6, "3h/1h crossover threshold", pass,
           crossover < 0 ? "no crossover on the grid"
                         : "first receiver count with SOC(3h) < SOC(1h): " +
                               std::to_string(crossover));
}

void criterion_7_full_charge(const SweepTables& tables) {
    bool pass = true;
    std::string detail;
    for (const auto& row : tables.power_rows) {
        if (row.n_receivers == 10 && row.transmit_power_w >= 40.0) {
            pass = pass && row.mean_soc > 0.95;
            detail += fmt(row.transmit_power_w) + "W:" + fmt(row.mean_soc) + " ";
        }
    }
    report(7, "full charge at 10 receivers, P_t >= 40 W", pass, detail);
}

void criterion_8_monotonicity(const SweepTables& tables) {
    int violations = 0;
    int comparisons = 0;
    const auto slack = [](const rbc::AggregateResult& a,
                          const rbc::AggregateResult& b) {
        const double se_a = a.std_soc / std::sqrt(static_cast<double>(a.trials));
        const double se_b = b.std_soc / std::sqrt(static_cast<double>(b.trials));
        return 2.0 * std::sqrt(se_a * se_a + se_b * se_b);
    };

    // non-increasing in receiver count at fixed checkpoint (time sweep)
    for (double cp : {1.0, 2.0, 3.0}) {
        const rbc::AggregateResult* prev = nullptr;
        for (const auto& row : tables.time_rows) {
            if (row.checkpoint_hours != cp) continue;
            if (prev) {
                ++comparisons;
                if (row.mean_soc > prev->mean_soc + slack(*prev, row)) ++violations;
            }
            prev = &row;
        }
    }
    // non-increasing in receiver count at fixed power, and non-decreasing in
    // power at fixed receiver count (power sweep)
    for (double p_t : {20.0, 40.0, 60.0, 80.0, 100.0}) {
        const rbc::AggregateResult* prev = nullptr;
        for (const auto& row : tables.power_rows) {
            if (row.transmit_power_w != p_t) continue;
            if (prev) {
                ++comparisons;
                if (row.mean_soc > prev->mean_soc + slack(*prev, row)) ++violations;
            }
            prev = &row;
        }
    }
    for (int n : {10, 15, 20, 25, 30, 35, 40, 45, 50}) {
        const rbc::AggregateResult* prev = nullptr;
        for (const auto& row : tables.power_rows) {
            if (row.n_receivers != n) continue;
            if (prev) {
                ++comparisons;
                if (row.mean_soc < prev->mean_soc - slack(*prev, row)) ++violations;
            }
            prev = &row;
        }
    }
    report(8, "monotone trends within 2 standard errors", violations == 0,
           std::to_string(comparisons) + " grid comparisons, " +
               std::to_string(violations) + " violations");
}

void criterion_9_discharge_distribution() {
    const int n = 1000000;
    rbc::RngStream rng(424242, 0);
    std::array<int, 5> counts{};
    double power_sum = 0.0;
    for (int i = 0; i < n; ++i) {
        const auto [status, power] = rbc::sample_discharge(rng);
        ++counts[static_cast<std::size_t>(status)];
        power_sum += power;
    }
    bool freq_ok = true;
    double worst = 0.0;
    for (std::size_t i = 0; i < rbc::kWorkingStatusCount; ++i) {
        const double diff =
            std::abs(static_cast<double>(counts[i]) / n -
                     rbc::usage_rate(rbc::kAllStatuses[i]));
        worst = std::max(worst, diff);
        freq_ok = freq_ok && diff <= 0.005;
    }
    // expectation of Sum(P_u * U_p), evaluated exactly before the build
    const double expectation = 0.28394633;
    const double mean = power_sum / n;
    const bool mean_ok = std::abs(mean - expectation) <= 0.002;
    report(9, "discharge distribution", freq_ok && mean_ok,
           "worst frequency error=" + fmt(worst) + " mean=" + fmt(mean) +
               " (expected " + fmt(expectation) + ")");
}

void criterion_10_fit_validation() {
    const auto report_data = rbc::validate_fits();
    bool pass = report_data.entries.size() == 2;
    std::string detail;
    for (const auto& entry : report_data.entries) {
        pass = pass && std::isfinite(entry.rmse) && entry.self_pairs_zero;
        detail += rbc::variant_name(entry.variant) + ":rmse=" + fmt(entry.rmse) +
                  "(" + entry.status + ") ";
    }

    // metamorphic identity on random pair sets
    rbc::RngStream rng(8, 8);
    const auto& coeffs = rbc::r44_coefficients();
    for (int round = 0; round < 200; ++round) {
        rbc::StandardPairs pairs;
        const int count = 1 + static_cast<int>(rng.next_below(30));
        for (int i = 0; i < count; ++i) {
            pairs.push_back({6.3865 * rng.next_unit(), 5.0 * rng.next_unit()});
        }
        const auto se = rbc::fit_square_errors(coeffs, pairs);
        double mean = 0.0;
        for (double v : se) mean += v;
        mean /= static_cast<double>(se.size());
        if (std::abs(rbc::fit_rmse(coeffs, pairs) - std::sqrt(mean)) > 1e-14) {
            pass = false;
        }
    }
    detail += "self-pairs rmse = 0 and rmse = sqrt(mean SE) hold";
    report(10, "fit validation (soft thresholds, hard identities)", pass, detail);
}

void criterion_11_determinism() {
    rbc::SweepConfig config;
    config.base.termination = rbc::TerminationMode::Continue;
    config.base.time_limit_hours = 1.0;
    config.receiver_counts = {5, 10};
    config.checkpoints_hours = {0.5, 1.0};
    config.trials = 20;
    config.master_seed = 77;

    std::ostringstream a;
    rbc::write_time_sweep_csv(a, rbc::time_sweep(config));
    std::ostringstream b;
    rbc::write_time_sweep_csv(b, rbc::time_sweep(config));

    rbc::SchedulerConfig point;
    point.receiver_count = 4;
    point.time_limit_hours = 0.5;
    std::ostringstream t1;
    rbc::write_trace_csv(t1, rbc::run_simulation(point, 9));
    std::ostringstream t2;
    rbc::write_trace_csv(t2, rbc::run_simulation(point, 9));

    const bool pass = a.str() == b.str() && t1.str() == t2.str();
    report(11, "byte-identical reruns", pass,
           "sweep CSV " + std::to_string(a.str().size()) + " bytes, trace CSV " +
               std::to_string(t1.str().size()) + " bytes");
}

}  // namespace

int main() {
    criterion_1_efficiency_chain();
    criterion_2_fit_point_values();
    criterion_3_fit_scan();
    criterion_4_allocation_oracle();
    criterion_5_conservation_property();

    std::printf("running 200-trial reference sweeps (time grid + power grid)...\n");
    std::fflush(stdout);
    const SweepTables tables = run_reference_sweeps();
    criterion_6_threshold(tables);
    criterion_7_full_charge(tables);
    criterion_8_monotonicity(tables);

    criterion_9_discharge_distribution();
    criterion_10_fit_validation();
    criterion_11_determinism();

    if (failures == 0) {
        std::printf("all acceptance criteria passed\n");
    } else {
        std::printf("%d acceptance criteria FAILED\n", failures);
    }
    return failures == 0 ? 0 : 1;
}
