#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "rbc/errors.hpp"
#include "rbc/rational_fit.hpp"

using rbc::BatterySpec;
using rbc::FitVariant;
using rbc::RationalFitCoefficients;

TEST_CASE("built-in coefficient tables have the published shape and values") {
    const auto& r44 = rbc::r44_coefficients();
    REQUIRE(r44.numerator.size() == 5);
    REQUIRE(r44.denominator.size() == 5);
    CHECK(r44.denominator[0] == 1.0);
    CHECK(r44.numerator[0] == -3.112);
    CHECK(r44.numerator[4] == 0.1543);
    CHECK(r44.denominator[4] == 0.4007);

    const auto& r45 = rbc::r45_coefficients();
    REQUIRE(r45.numerator.size() == 5);
    REQUIRE(r45.denominator.size() == 6);
    CHECK(r45.denominator[0] == 1.0);
    CHECK(r45.numerator[0] == -21.65);
    CHECK(r45.numerator[4] == 0.008358);
    CHECK(r45.denominator[5] == 0.0362);
}

TEST_CASE("fit values at the documented operating point") {
    CHECK(std::abs(rbc::eval_rational_fit(rbc::r44_coefficients(), 3.8319) - 3.8650) <
          5e-3);
    CHECK(std::abs(rbc::eval_rational_fit(rbc::r45_coefficients(), 3.8319) - 3.8712) <
          5e-3);
}

TEST_CASE("constant-term ratio at x = 0") {
    const RationalFitCoefficients coeffs{{0.0, 0.0, 0.0, 0.0, 3.5},
                                         {1.0, 0.0, 0.0, 0.0, 0.7}};
    CHECK(rbc::eval_rational_fit(coeffs, 0.0) == doctest::Approx(5.0));
}

TEST_CASE("vanishing denominator raises a singularity carrying x") {
    const RationalFitCoefficients coeffs{{1.0, 1.0}, {1.0, 0.0}};  // Q(x) = x
    try {
        rbc::eval_rational_fit(coeffs, 1e-12);
        FAIL("expected SingularityError");
    } catch (const rbc::SingularityError& e) {
        CHECK(e.at() == 1e-12);
    }
    CHECK_NOTHROW(rbc::eval_rational_fit(coeffs, 0.5));
}

TEST_CASE("preferred power at the documented SOC points") {
    const BatterySpec spec;
    CHECK(std::abs(rbc::preferred_power(FitVariant::R44, 0.60, spec) - 3.8650) < 5e-3);
    CHECK(std::abs(rbc::preferred_power(FitVariant::R45, 0.60, spec) - 3.8712) < 5e-3);
    CHECK(rbc::preferred_power(FitVariant::R44, 1.0, spec) == 0.0);
    CHECK(rbc::preferred_power(FitVariant::R45, 1.0, spec) == 0.0);
    // value frozen from a standalone high-precision Horner evaluation
    CHECK(std::abs(rbc::preferred_power(FitVariant::R44, 0.25, spec) -
                   3.8881466444038018) < 1e-9);
    CHECK_THROWS_AS(rbc::preferred_power(FitVariant::R44, -0.1, spec),
                    std::domain_error);
}

TEST_CASE("both fits are finite, nonnegative and close across [0, E_o]") {
    const BatterySpec spec;
    double max_diff = 0.0;
    for (int i = 0; i <= 10000; ++i) {
        const double x = spec.total_energy * i / 10000.0;
        const double f44 = rbc::eval_rational_fit(rbc::r44_coefficients(), x);
        const double f45 = rbc::eval_rational_fit(rbc::r45_coefficients(), x);
        CHECK(std::isfinite(f44));
        CHECK(std::isfinite(f45));
        CHECK(rbc::preferred_power_at_energy(FitVariant::R44, x, spec) >= 0.0);
        CHECK(rbc::preferred_power_at_energy(FitVariant::R45, x, spec) >= 0.0);
        max_diff = std::max(max_diff, std::abs(f44 - f45));
    }
    CHECK(max_diff < 0.25);
}
