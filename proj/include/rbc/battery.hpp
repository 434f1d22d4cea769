#pragma once

namespace rbc {

/// Receiver battery ratings. Energy is bookkept in watt-hour units; the
/// default instance is a 4.2 V / 1 A / 1000 mAh lithium-ion cell holding
/// 6.3865 units when full.
struct BatterySpec {
    double capacity_mah = 1000.0;
    double cv_voltage = 4.2;
    double cc_current = 1.0;
    double total_energy = 6.3865;
};

// soc in [0,1] <-> stored energy in [0, total].
double soc_to_energy(double soc, const BatterySpec& spec);
double energy_to_soc(double energy, const BatterySpec& spec);

}  // namespace rbc
