#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "rbc/battery.hpp"

using rbc::BatterySpec;

TEST_CASE("soc_to_energy maps fractions onto stored watt-hours") {
    const BatterySpec spec;
    CHECK(spec.total_energy == doctest::Approx(6.3865));

    CHECK(std::abs(rbc::soc_to_energy(0.60, spec) - 3.8319) < 1e-4);
    CHECK(rbc::soc_to_energy(0.0, spec) == 0.0);
    CHECK(rbc::soc_to_energy(1.0, spec) == spec.total_energy);

    CHECK_THROWS_AS(rbc::soc_to_energy(-0.01, spec), std::domain_error);
    CHECK_THROWS_AS(rbc::soc_to_energy(1.01, spec), std::domain_error);
    CHECK_THROWS_AS(rbc::soc_to_energy(std::nan(""), spec), std::domain_error);
}

TEST_CASE("energy_to_soc is the inverse mapping") {
    const BatterySpec spec;
    CHECK(std::abs(rbc::energy_to_soc(3.8319, spec) - 0.60) < 1e-4);
    CHECK(rbc::energy_to_soc(0.0, spec) == 0.0);
    CHECK(rbc::energy_to_soc(spec.total_energy, spec) == 1.0);

    CHECK_THROWS_AS(rbc::energy_to_soc(-1e-9, spec), std::domain_error);
    CHECK_THROWS_AS(rbc::energy_to_soc(spec.total_energy + 1e-9, spec),
                    std::domain_error);
}

TEST_CASE("soc round trip stays within 1e-12 on a dense grid") {
    const BatterySpec spec;
    for (int i = 0; i <= 1000; ++i) {
        const double soc = i / 1000.0;
        const double back = rbc::energy_to_soc(rbc::soc_to_energy(soc, spec), spec);
        CHECK(std::abs(back - soc) <= 1e-12);
    }
}
