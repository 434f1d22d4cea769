#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "rbc/battery.hpp"
#include "rbc/rational_fit.hpp"

namespace rbc {

/// Shape parameters of the synthesized four-stage charging profile.
/// Trickle charge holds trickle_current while the voltage ramps linearly
/// from initial_voltage to trickle_end_voltage; constant current holds the
/// battery's CC rating while the voltage ramps to the CV rating; constant
/// voltage holds the CV rating while the current decays exponentially,
/// reaching termination_current at the end of the stage. Stage durations
/// are explicit; the defaults total 3.6 h and were tuned so the extracted
/// energy/power pairs track the built-in rational fits as closely as the
/// piecewise shapes allow.
struct ProfileParams {
    double trickle_current = 0.1;       // A
    double initial_voltage = 2.5;       // V
    double trickle_end_voltage = 3.0;   // V
    double termination_current = 0.02;  // A
    double tc_hours = 0.24;
    double cc_hours = 1.08;
    double cv_hours = 2.28;
    double sample_step_hours = 0.01;

    double total_hours() const { return tc_hours + cc_hours + cv_hours; }
};

struct ProfileSample {
    double time_hours;
    double voltage;
    double current;
};

/// Sampled charging profile. Sample times are strictly increasing and
/// include the exact stage boundaries; the current step at the TC/CC
/// boundary is straddled by a sample 1e-9 h before it.
struct ChargeProfile {
    std::vector<ProfileSample> samples;
    double tc_end_hours = 0.0;
    double cc_end_hours = 0.0;
    double end_hours = 0.0;
};

/// (stored energy, preferred power) pairs extracted from a profile.
struct StandardPair {
    double energy;  // watt-hours
    double power;   // watts
};
using StandardPairs = std::vector<StandardPair>;

ChargeProfile synthesize_cc_cv_profile(const BatterySpec& spec,
                                       const ProfileParams& params);

/// Pointwise charging power U*I, (time, watts).
std::vector<std::pair<double, double>> profile_power(const ChargeProfile& profile);

/// Cumulative trapezoidal integral of the charging power, (time, watt-hours).
/// First value is 0; the series is non-decreasing.
std::vector<std::pair<double, double>> profile_energy(const ChargeProfile& profile);

/// Zip of profile_energy with profile_power at identical timestamps.
StandardPairs standard_pairs(const ChargeProfile& profile);

/// Per-pair squared error between the fit value at the pair's energy and
/// the pair's power.
std::vector<double> fit_square_errors(const RationalFitCoefficients& coeffs,
                                      const StandardPairs& pairs);

double fit_rmse(const RationalFitCoefficients& coeffs, const StandardPairs& pairs);

}  // namespace rbc
