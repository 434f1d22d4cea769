#include "rbc/discharge.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>

namespace rbc {
namespace {

constexpr std::array<double, kWorkingStatusCount> kPowers = {
    0.0076, 0.4289, 0.4348, 0.6766, 0.1706};
constexpr std::array<double, kWorkingStatusCount> kRates = {
    0.2839, 0.1235, 0.2469, 0.1235, 0.2222};

const std::array<double, kWorkingStatusCount>& cumulative_rates() {
    static const auto cdf = [] {
        std::array<double, kWorkingStatusCount> acc{};
        double sum = 0.0;
        for (std::size_t i = 0; i < kWorkingStatusCount; ++i) {
            sum += kRates[i];
            acc[i] = sum;
        }
        assert(std::abs(sum - 1.0) < 1e-9);
        return acc;
    }();
    return cdf;
}

}  // namespace

double discharge_power(WorkingStatus status) {
    return kPowers[static_cast<std::size_t>(status)];
}

double usage_rate(WorkingStatus status) {
    return kRates[static_cast<std::size_t>(status)];
}

std::string status_name(WorkingStatus status) {
    switch (status) {
        case WorkingStatus::Standby: return "standby";
        case WorkingStatus::Video: return "video";
        case WorkingStatus::Social: return "social";
        case WorkingStatus::Game: return "game";
        case WorkingStatus::Music: return "music";
    }
    return "?";
}

WorkingStatus status_from_unit(double u) {
    const auto& cdf = cumulative_rates();
    for (std::size_t i = 0; i + 1 < kWorkingStatusCount; ++i) {
        if (u < cdf[i]) return kAllStatuses[i];
    }
    return kAllStatuses[kWorkingStatusCount - 1];
}

std::pair<WorkingStatus, double> sample_discharge(RngStream& rng) {
    const auto status = status_from_unit(rng.next_unit());
    return {status, discharge_power(status)};
}

std::vector<double> sample_discharge_vector(RngStream& rng, std::size_t n) {
    if (n == 0) throw std::domain_error("sample_discharge_vector: n must be >= 1");
    std::vector<double> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(sample_discharge(rng).second);
    return out;
}

}  // namespace rbc
