#include "rbc/rational_fit.hpp"

#include <cmath>
#include <cstdlib>

#include "rbc/errors.hpp"

namespace rbc {
namespace {

double horner(const std::vector<double>& coeffs, double x) {
    double acc = 0.0;
    for (double c : coeffs) acc = acc * x + c;
    return acc;
}

}  // namespace

const RationalFitCoefficients& r44_coefficients() {
    static const RationalFitCoefficients coeffs{
        {-3.112, 1.439, 120.4, -7.452, 0.1543},
        {1.0, -9.881, 44.84, -5.49, 0.4007},
    };
    return coeffs;
}

const RationalFitCoefficients& r45_coefficients() {
    static const RationalFitCoefficients coeffs{
        {-21.65, 141.2, -11.5, 0.1526, 0.008358},
        {1.0, -10.7, 41.01, -1.509, -0.3997, 0.0362},
    };
    return coeffs;
}

const RationalFitCoefficients& coefficients_for(FitVariant variant) {
    return variant == FitVariant::R44 ? r44_coefficients() : r45_coefficients();
}

std::string variant_name(FitVariant variant) {
    return variant == FitVariant::R44 ? "r44" : "r45";
}

double eval_rational_fit(const RationalFitCoefficients& coeffs, double x) {
    const double q = horner(coeffs.denominator, x);
    if (std::abs(q) < 1e-9) {
        throw SingularityError(
            "eval_rational_fit: denominator vanished at x = " +
                std::to_string(x),
            x);
    }
    return horner(coeffs.numerator, x) / q;
}

double preferred_power_at_energy(FitVariant variant, double energy,
                                 const BatterySpec& spec) {
    if (energy >= spec.total_energy) return 0.0;  // full battery asks nothing
    const double p = eval_rational_fit(coefficients_for(variant), energy);
    return p > 0.0 ? p : 0.0;
}

double preferred_power(FitVariant variant, double soc, const BatterySpec& spec) {
    return preferred_power_at_energy(variant, soc_to_energy(soc, spec), spec);
}

}  // namespace rbc
