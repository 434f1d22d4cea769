#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "rbc/rng.hpp"

namespace rbc {

/// Receiver working status while being charged. Order matters: it defines
/// the cumulative intervals of the inverse-CDF draw.
enum class WorkingStatus { Standby, Video, Social, Game, Music };

inline constexpr std::size_t kWorkingStatusCount = 5;

inline constexpr std::array<WorkingStatus, kWorkingStatusCount> kAllStatuses = {
    WorkingStatus::Standby, WorkingStatus::Video, WorkingStatus::Social,
    WorkingStatus::Game, WorkingStatus::Music};

/// Discharging power of each status, watts.
double discharge_power(WorkingStatus status);

/// Usage rate (probability) of each status; rates sum to 1.
double usage_rate(WorkingStatus status);

std::string status_name(WorkingStatus status);

/// Inverse-CDF mapping of a uniform u in [0,1) over the cumulative usage
/// rates in declaration order.
WorkingStatus status_from_unit(double u);

/// One draw from the usage-rate distribution.
std::pair<WorkingStatus, double> sample_discharge(RngStream& rng);

/// n independent draws, receiver-queue order; n must be >= 1.
std::vector<double> sample_discharge_vector(RngStream& rng, std::size_t n);

}  // namespace rbc
