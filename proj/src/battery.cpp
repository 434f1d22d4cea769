#include "rbc/battery.hpp"

#include <stdexcept>
#include <string>

namespace rbc {

double soc_to_energy(double soc, const BatterySpec& spec) {
    if (!(soc >= 0.0 && soc <= 1.0)) {
        throw std::domain_error("soc_to_energy: soc out of [0,1]: " +
                                std::to_string(soc));
    }
    return soc * spec.total_energy;
}

double energy_to_soc(double energy, const BatterySpec& spec) {
    if (!(energy >= 0.0 && energy <= spec.total_energy)) {
        throw std::domain_error("energy_to_soc: energy out of [0, E_o]: " +
                                std::to_string(energy));
    }
    return energy / spec.total_energy;
}

}  // namespace rbc
