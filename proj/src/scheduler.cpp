#include "rbc/scheduler.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "rbc/errors.hpp"

namespace rbc {

bool Trace::operator==(const Trace& other) const {
    if (initial_soc != other.initial_soc || slots.size() != other.slots.size() ||
        reason != other.reason || slot_seconds != other.slot_seconds ||
        total_hours != other.total_hours) {
        return false;
    }
    for (std::size_t i = 0; i < slots.size(); ++i) {
        const auto& a = slots[i];
        const auto& b = other.slots[i];
        if (a.soc != b.soc || a.allocation != b.allocation ||
            a.discharge != b.discharge || a.queue != b.queue) {
            return false;
        }
    }
    return true;
}

std::vector<Receiver> init_receivers(const SchedulerConfig& config, RngStream& rng) {
    if (config.receiver_count < 1) {
        throw ConfigError("init_receivers: receiver_count must be >= 1");
    }
    const auto n = static_cast<std::size_t>(config.receiver_count);
    if (!config.initial_soc.empty() && config.initial_soc.size() != n) {
        throw ConfigError("init_receivers: initial_soc has " +
                          std::to_string(config.initial_soc.size()) +
                          " entries for " + std::to_string(n) + " receivers");
    }

    std::vector<Receiver> receivers;
    receivers.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double soc = config.initial_soc.empty()
                               ? rng.next_below(101) / 100.0
                               : config.initial_soc[i];
        Receiver r;
        r.id = static_cast<int>(i) + 1;
        r.energy = soc_to_energy(soc, config.battery);
        receivers.push_back(r);
    }
    return receivers;
}

SlotAllocation allocate_slot(const std::vector<double>& preferred,
                             double budget_watts) {
    if (budget_watts < 0.0) {
        throw std::domain_error("allocate_slot: negative power budget");
    }
    for (double p : preferred) {
        if (p < 0.0) throw std::domain_error("allocate_slot: negative request");
    }

    SlotAllocation result;
    result.allocations.assign(preferred.size(), 0.0);
    double residual = budget_watts;
    for (std::size_t i = 0; i < preferred.size(); ++i) {
        if (preferred[i] <= 0.0) continue;
        if (residual >= preferred[i]) {
            result.allocations[i] = preferred[i];
            residual -= preferred[i];
            result.served_count = i + 1;
        } else if (residual > 0.0) {
            result.allocations[i] = residual;
            residual = 0.0;
            result.served_count = i + 1;
        }
    }
    return result;
}

void apply_slot(std::vector<Receiver>& receivers, const std::vector<int>& queue,
                const std::vector<double>& allocations,
                const std::vector<double>& discharges, double slot_seconds,
                const BatterySpec& spec) {
    if (allocations.size() != queue.size() || discharges.size() != queue.size()) {
        throw InternalError("apply_slot: queue-aligned lists have mismatched sizes");
    }
    const double dt_hours = slot_seconds / 3600.0;
    for (std::size_t pos = 0; pos < queue.size(); ++pos) {
        auto& r = receivers.at(static_cast<std::size_t>(queue[pos]) - 1);
        r.last_allocation = allocations[pos];
        r.last_discharge = discharges[pos];
        r.energy += (allocations[pos] - discharges[pos]) * dt_hours;
        if (r.energy <= 0.0) {
            r.energy = 0.0;
            r.alive = false;
        } else if (r.energy > spec.total_energy) {
            r.energy = spec.total_energy;
        }
    }
}

std::vector<int> rotate_queue(const std::vector<int>& queue, std::size_t k) {
    if (k > queue.size()) {
        throw std::domain_error("rotate_queue: k exceeds queue length");
    }
    std::vector<int> rotated = queue;
    std::rotate(rotated.begin(), rotated.begin() + static_cast<std::ptrdiff_t>(k),
                rotated.end());
    return rotated;
}

std::optional<TerminationReason> check_termination(
    const std::vector<Receiver>& receivers, double elapsed_hours,
    const SchedulerConfig& config) {
    if (config.termination == TerminationMode::Strict) {
        for (const auto& r : receivers) {
            if (r.energy <= 0.0) return TerminationReason::BatteryExhausted;
        }
    }
    bool all_full = true;
    for (const auto& r : receivers) {
        if (r.energy < config.battery.total_energy) {
            all_full = false;
            break;
        }
    }
    if (all_full) return TerminationReason::AllFullyCharged;
    if (elapsed_hours >= config.time_limit_hours - 1e-12) {
        return TerminationReason::TimeLimitReached;
    }
    return std::nullopt;
}

Trace run_simulation(const SchedulerConfig& config, std::uint64_t seed,
                     std::uint64_t stream) {
    if (!(config.transmit_power_w > 0.0)) {
        throw ConfigError("run_simulation: transmit power must be positive");
    }
    if (!(config.slot_seconds > 0.0)) {
        throw ConfigError("run_simulation: slot length must be positive");
    }
    if (config.time_limit_hours * 3600.0 < config.slot_seconds) {
        throw ConfigError("run_simulation: time limit shorter than one slot");
    }
    if (!(config.delivery_efficiency > 0.0 && config.delivery_efficiency <= 1.0)) {
        throw ConfigError("run_simulation: delivery efficiency must be in (0,1]");
    }
    if (!(config.battery.total_energy > 0.0)) {
        throw ConfigError("run_simulation: battery total energy must be positive");
    }

    RngStream rng(seed, stream);
    std::vector<Receiver> receivers = init_receivers(config, rng);
    const auto n = receivers.size();

    Trace trace;
    trace.slot_seconds = config.slot_seconds;
    trace.initial_soc.reserve(n);
    for (const auto& r : receivers) {
        trace.initial_soc.push_back(r.energy / config.battery.total_energy);
    }

    std::vector<int> queue;
    queue.reserve(n);
    for (const auto& r : receivers) queue.push_back(r.id);

    const double budget = config.transmit_power_w * config.delivery_efficiency;
    const double slot_hours = config.slot_seconds / 3600.0;

    std::vector<double> preferred;
    std::vector<double> discharges;
    std::size_t slot = 0;
    double elapsed_hours = 0.0;
    for (;;) {
        if (auto reason = check_termination(receivers, elapsed_hours, config)) {
            trace.reason = *reason;
            break;
        }

        preferred.clear();
        for (int id : queue) {
            const auto& r = receivers[static_cast<std::size_t>(id) - 1];
            preferred.push_back(
                preferred_power_at_energy(config.variant, r.energy, config.battery));
        }

        discharges.clear();
        if (config.forced_status) {
            discharges.assign(queue.size(), discharge_power(*config.forced_status));
        } else {
            for (std::size_t i = 0; i < queue.size(); ++i) {
                discharges.push_back(sample_discharge(rng).second);
            }
        }

        SlotAllocation alloc = allocate_slot(preferred, budget);

        // Structural check: granting nothing to a positive request while a
        // later receiver is served would break the prefix-service shape.
        bool exhausted = false;
        for (std::size_t i = 0; i < alloc.allocations.size(); ++i) {
            if (preferred[i] > 0.0 && alloc.allocations[i] == 0.0) exhausted = true;
            if (exhausted && alloc.allocations[i] > 0.0) {
                throw InternalError("run_simulation: non-prefix service");
            }
        }

        std::size_t rotate_by = alloc.served_count;
        if (!config.partial_service_rotates && rotate_by > 0) {
            const std::size_t last = rotate_by - 1;
            if (alloc.allocations[last] < preferred[last]) rotate_by = last;
        }

        apply_slot(receivers, queue, alloc.allocations, discharges,
                   config.slot_seconds, config.battery);

        SlotRecord record;
        record.soc.resize(n, 0.0);
        record.allocation.resize(n, 0.0);
        record.discharge.resize(n, 0.0);
        for (const auto& r : receivers) {
            const auto idx = static_cast<std::size_t>(r.id) - 1;
            record.soc[idx] = r.energy / config.battery.total_energy;
        }
        for (std::size_t pos = 0; pos < queue.size(); ++pos) {
            const auto idx = static_cast<std::size_t>(queue[pos]) - 1;
            record.allocation[idx] = alloc.allocations[pos];
            record.discharge[idx] = discharges[pos];
        }
        record.queue = queue;
        trace.slots.push_back(std::move(record));

        queue = rotate_queue(queue, rotate_by);
        std::erase_if(queue, [&](int id) {
            return !receivers[static_cast<std::size_t>(id) - 1].alive;
        });

        ++slot;
        elapsed_hours = static_cast<double>(slot) * slot_hours;
    }

    trace.total_hours = static_cast<double>(trace.slots.size()) * slot_hours;
    return trace;
}

}  // namespace rbc
