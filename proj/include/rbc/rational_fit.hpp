#pragma once

#include <string>
#include <vector>

#include "rbc/battery.hpp"

namespace rbc {

/// Coefficients of a rational function P(x)/Q(x), highest power first.
/// The denominator's leading coefficient is fixed at 1.
struct RationalFitCoefficients {
    std::vector<double> numerator;
    std::vector<double> denominator;
};

/// The two published preferred-charging-power fits: degree 4/4 and 4/5
/// rationals mapping stored battery energy (watt-hours) to the power the
/// battery wants at that fill level (watts).
enum class FitVariant { R44, R45 };

const RationalFitCoefficients& r44_coefficients();
const RationalFitCoefficients& r45_coefficients();
const RationalFitCoefficients& coefficients_for(FitVariant variant);

std::string variant_name(FitVariant variant);

/// Horner evaluation of P(x)/Q(x). Throws SingularityError when |Q(x)|
/// falls below 1e-9 (never happens on [0, E_o] for the built-in fits).
double eval_rational_fit(const RationalFitCoefficients& coeffs, double x);

/// Preferred charging power at a stored-energy level: the fit value clamped
/// below at 0 W, and exactly 0 W for a full battery.
double preferred_power_at_energy(FitVariant variant, double energy,
                                 const BatterySpec& spec);

/// Same, addressed by state of charge in [0,1].
double preferred_power(FitVariant variant, double soc, const BatterySpec& spec);

}  // namespace rbc
