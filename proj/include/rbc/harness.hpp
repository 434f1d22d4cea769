#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rbc/charge_profile.hpp"
#include "rbc/scheduler.hpp"

namespace rbc {

/// Batch design: which grid to run and how many seeded trials per point.
/// Each (variant, grid point) pair is one batch of `trials` independent
/// simulations; trial i uses RNG stream index i of the master seed.
struct SweepConfig {
    SchedulerConfig base;  // per-point fields are overwritten by the sweep
    std::vector<int> receiver_counts = {10, 15, 20, 25, 30, 35, 40, 45, 50};
    std::vector<double> transmit_powers = {20.0, 40.0, 60.0, 80.0, 100.0};
    std::vector<double> checkpoints_hours = {1.0, 2.0, 3.0};
    std::vector<FitVariant> variants = {FitVariant::R44};
    int trials = 200;
    std::uint64_t master_seed = 1;
    int threads = 0;  // <= 0: one worker per hardware thread
};

/// Mean over receivers and trials of the SOC at one sweep point, with the
/// trial-to-trial spread and the dead / fully-charged receiver fractions.
struct AggregateResult {
    int n_receivers = 0;
    double checkpoint_hours = 0.0;
    double transmit_power_w = 0.0;
    FitVariant variant = FitVariant::R44;
    double mean_soc = 0.0;
    double std_soc = 0.0;
    double dead_frac = 0.0;
    double full_frac = 0.0;
    int trials = 0;
};

/// Per-checkpoint statistics of one batch of trials.
struct CheckpointStats {
    double mean_soc = 0.0;
    double std_soc = 0.0;
    double dead_frac = 0.0;
    double full_frac = 0.0;
};

/// Runs `trials` simulations of one point and aggregates the receiver-mean
/// SOC at each checkpoint. Checkpoints are read from a single run's trace
/// (stages of one charging process, not separate runs). The reduction is a
/// fixed-order fold over trial index, so results do not depend on worker
/// scheduling.
std::vector<CheckpointStats> run_trials(const SchedulerConfig& point,
                                        const std::vector<double>& checkpoints_hours,
                                        int trials, std::uint64_t master_seed,
                                        int threads = 0);

/// Grid over (receiver count, checkpoint) at the base transmit power.
std::vector<AggregateResult> time_sweep(const SweepConfig& config);

/// Grid over (receiver count, transmit power) at the last checkpoint time.
std::vector<AggregateResult> power_sweep(const SweepConfig& config);

/// Scores both built-in fits against the pairs extracted from a synthesized
/// profile. Classification: pass below 0.1, warn in [0.1, 0.2), fail at or
/// above 0.2. Also checks that scoring a fit against pairs generated from
/// itself yields exactly zero.
struct FitValidationEntry {
    FitVariant variant = FitVariant::R44;
    double rmse = 0.0;
    double max_square_error = 0.0;
    std::string status;  // "pass" | "warn" | "fail"
    bool self_pairs_zero = false;
};

struct FitValidationReport {
    std::vector<FitValidationEntry> entries;
    std::string overall;  // worst entry status, or "fail" on self-check breakage
};

FitValidationReport validate_fits(const BatterySpec& spec = {},
                                  const ProfileParams& params = {});

std::string format_validation_report(const FitValidationReport& report);

}  // namespace rbc
