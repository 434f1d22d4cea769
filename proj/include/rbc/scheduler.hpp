#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "rbc/battery.hpp"
#include "rbc/discharge.hpp"
#include "rbc/rational_fit.hpp"
#include "rbc/rng.hpp"

namespace rbc {

/// One charging receiver. Energy is clamped to [0, E_o]; a receiver whose
/// energy clamps to 0 is dead: it leaves the queue and gets neither
/// allocation nor discharge afterwards.
struct Receiver {
    int id = 0;  // access order, 1-based
    double energy = 0.0;
    bool alive = true;
    double last_allocation = 0.0;  // battery-side charging power, W
    double last_discharge = 0.0;   // W
};

enum class TerminationMode {
    Strict,  // end the run the moment any battery empties
    Continue,     // dead receivers stay dead, the run continues
};

enum class TerminationReason { BatteryExhausted, AllFullyCharged, TimeLimitReached };

struct SchedulerConfig {
    double transmit_power_w = 20.0;
    int receiver_count = 10;
    double slot_seconds = 10.0;
    double time_limit_hours = 3.0;
    FitVariant variant = FitVariant::R44;
    TerminationMode termination = TerminationMode::Continue;
    BatterySpec battery;

    /// Fraction of allocated transmitting power that reaches the battery
    /// as charging power (the post-transmitter link stages). 1.0 treats
    /// allocated transmit watts as battery watts directly.
    double delivery_efficiency = 0.5;

    /// Empty: initial SOC is an integer percentage drawn uniformly from
    /// {0,...,100} per receiver. Otherwise one fraction per receiver.
    std::vector<double> initial_soc;

    /// Pin every receiver to one working status instead of sampling.
    std::optional<WorkingStatus> forced_status;

    /// When false, a partially served receiver keeps its queue position
    /// instead of rotating to the tail with the fully served ones.
    bool partial_service_rotates = true;
};

/// Outcome of one allocation walk over the queue.
struct SlotAllocation {
    std::vector<double> allocations;  // queue order, battery-side watts
    std::size_t served_count = 0;     // receivers rotated to the tail
};

struct SlotRecord {
    std::vector<double> soc;        // by receiver id (index id-1), post-slot
    std::vector<double> allocation; // by receiver id, this slot
    std::vector<double> discharge;  // by receiver id, this slot
    std::vector<int> queue;         // order the slot was served in
};

struct Trace {
    std::vector<double> initial_soc;  // by receiver id
    std::vector<SlotRecord> slots;
    TerminationReason reason = TerminationReason::TimeLimitReached;
    double slot_seconds = 0.0;
    double total_hours = 0.0;

    bool operator==(const Trace& other) const;
};

/// Receivers in access order with initial energies from the config.
std::vector<Receiver> init_receivers(const SchedulerConfig& config, RngStream& rng);

/// Greedy head-to-tail walk: grant each positive request in full while the
/// budget covers it, the residual to the first it cannot, nothing after.
/// Zero requests are skipped without consuming budget or counting as served.
SlotAllocation allocate_slot(const std::vector<double>& preferred,
                             double budget_watts);

/// Energy update for one slot: E += (P_c - P_d) * T_c, clamped to [0, E_o].
/// A receiver clamped to 0 is marked dead. Lists are queue-aligned.
void apply_slot(std::vector<Receiver>& receivers, const std::vector<int>& queue,
                const std::vector<double>& allocations,
                const std::vector<double>& discharges, double slot_seconds,
                const BatterySpec& spec);

/// Left-rotate: the first k entries move to the tail, order preserved.
std::vector<int> rotate_queue(const std::vector<int>& queue, std::size_t k);

std::optional<TerminationReason> check_termination(
    const std::vector<Receiver>& receivers, double elapsed_hours,
    const SchedulerConfig& config);

/// One full deterministic run.
Trace run_simulation(const SchedulerConfig& config, std::uint64_t seed,
                     std::uint64_t stream = 0);

}  // namespace rbc
