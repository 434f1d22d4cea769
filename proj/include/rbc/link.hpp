#pragma once

namespace rbc {

/// Stage efficiencies of one charging link: electro-optical conversion at
/// the transmitter, beam transmission, photoelectric conversion at the
/// receiver. Defaults are the 810 nm reference link (40% / 100% / 50%).
struct LinkEfficiencies {
    double electro_optical = 0.40;
    double transmission = 1.00;
    double photoelectric = 0.50;
};

/// Power at each stage of the chain, source to receiver output.
struct PowerChain {
    double source = 0.0;
    double transmit = 0.0;
    double receiver_beam = 0.0;
    double receiver_electrical = 0.0;
};

/// Product of the three stage efficiencies.
double overall_efficiency(const LinkEfficiencies& eff);

/// Fraction of allocated transmitting power that arrives at the battery
/// (the post-transmitter stages only).
double delivery_efficiency(const LinkEfficiencies& eff);

PowerChain power_chain(double source_watts, const LinkEfficiencies& eff);

}  // namespace rbc
