#include "rbc/charge_profile.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "rbc/errors.hpp"

namespace rbc {
namespace {

constexpr double kJumpEpsHours = 1e-9;
constexpr double kKnotMergeEps = 1e-12;

struct PiecewiseShape {
    const BatterySpec& spec;
    const ProfileParams& p;
    double tau;  // CV decay constant, hours

    ProfileSample at(double t) const {
        const double tc = p.tc_hours;
        const double cc = p.cc_hours;
        if (t < tc) {
            const double v = p.initial_voltage +
                             (p.trickle_end_voltage - p.initial_voltage) * t / tc;
            return {t, v, p.trickle_current};
        }
        if (t < tc + cc) {
            const double v = p.trickle_end_voltage +
                             (spec.cv_voltage - p.trickle_end_voltage) * (t - tc) / cc;
            return {t, v, spec.cc_current};
        }
        const double local = std::min(t - tc - cc, p.cv_hours);
        return {t, spec.cv_voltage, spec.cc_current * std::exp(-local / tau)};
    }
};

}  // namespace

ChargeProfile synthesize_cc_cv_profile(const BatterySpec& spec,
                                       const ProfileParams& params) {
    if (!(params.tc_hours > 0.0 && params.cc_hours > 0.0 && params.cv_hours > 0.0)) {
        throw ConfigError("profile: stage durations must be positive");
    }
    if (!(params.sample_step_hours > 0.0)) {
        throw ConfigError("profile: sample step must be positive");
    }
    if (!(params.trickle_current > 0.0 && params.termination_current > 0.0 &&
          params.termination_current < spec.cc_current)) {
        throw ConfigError("profile: currents must satisfy 0 < I_term < I_cc");
    }
    if (!(params.initial_voltage > 0.0 &&
          params.initial_voltage <= params.trickle_end_voltage &&
          params.trickle_end_voltage <= spec.cv_voltage)) {
        throw ConfigError("profile: voltages must satisfy 0 < V0 <= V_tc <= V_cv");
    }

    const double total = params.total_hours();
    const PiecewiseShape shape{
        spec, params,
        params.cv_hours / std::log(spec.cc_current / params.termination_current)};

    std::vector<double> knots;
    for (std::size_t k = 0;; ++k) {
        const double t = static_cast<double>(k) * params.sample_step_hours;
        if (t > total + kKnotMergeEps) break;
        knots.push_back(t);
    }
    knots.push_back(params.tc_hours);
    knots.push_back(params.tc_hours + params.cc_hours);
    knots.push_back(total);
    if (params.tc_hours > kJumpEpsHours) {
        knots.push_back(params.tc_hours - kJumpEpsHours);  // straddle the current step
    }
    std::sort(knots.begin(), knots.end());

    ChargeProfile profile;
    profile.tc_end_hours = params.tc_hours;
    profile.cc_end_hours = params.tc_hours + params.cc_hours;
    profile.end_hours = total;
    profile.samples.reserve(knots.size());
    for (double t : knots) {
        if (!profile.samples.empty() &&
            t - profile.samples.back().time_hours <= kKnotMergeEps) {
            continue;
        }
        profile.samples.push_back(shape.at(t));
    }
    return profile;
}

std::vector<std::pair<double, double>> profile_power(const ChargeProfile& profile) {
    std::vector<std::pair<double, double>> out;
    out.reserve(profile.samples.size());
    for (const auto& s : profile.samples) {
        out.emplace_back(s.time_hours, s.voltage * s.current);
    }
    return out;
}

std::vector<std::pair<double, double>> profile_energy(const ChargeProfile& profile) {
    if (profile.samples.size() < 2) {
        throw std::domain_error("profile_energy: need at least 2 samples");
    }
    const auto power = profile_power(profile);
    std::vector<std::pair<double, double>> out;
    out.reserve(power.size());
    double acc = 0.0;
    out.emplace_back(power.front().first, 0.0);
    for (std::size_t i = 1; i < power.size(); ++i) {
        const double dt = power[i].first - power[i - 1].first;
        acc += 0.5 * (power[i].second + power[i - 1].second) * dt;
        out.emplace_back(power[i].first, acc);
    }
    return out;
}

StandardPairs standard_pairs(const ChargeProfile& profile) {
    const auto power = profile_power(profile);
    const auto energy = profile_energy(profile);
    StandardPairs pairs;
    pairs.reserve(power.size());
    for (std::size_t i = 0; i < power.size(); ++i) {
        pairs.push_back({energy[i].second, power[i].second});
    }
    return pairs;
}

std::vector<double> fit_square_errors(const RationalFitCoefficients& coeffs,
                                      const StandardPairs& pairs) {
    if (pairs.empty()) throw std::domain_error("fit_square_errors: empty pairs");
    std::vector<double> out;
    out.reserve(pairs.size());
    for (const auto& pair : pairs) {
        const double diff = eval_rational_fit(coeffs, pair.energy) - pair.power;
        out.push_back(diff * diff);
    }
    return out;
}

double fit_rmse(const RationalFitCoefficients& coeffs, const StandardPairs& pairs) {
    const auto errors = fit_square_errors(coeffs, pairs);
    double sum = 0.0;
    for (double e : errors) sum += e;
    return std::sqrt(sum / static_cast<double>(errors.size()));
}

}  // namespace rbc
