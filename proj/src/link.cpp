#include "rbc/link.hpp"

#include <stdexcept>
#include <string>

namespace rbc {

double overall_efficiency(const LinkEfficiencies& eff) {
    return eff.electro_optical * eff.transmission * eff.photoelectric;
}

double delivery_efficiency(const LinkEfficiencies& eff) {
    return eff.transmission * eff.photoelectric;
}

PowerChain power_chain(double source_watts, const LinkEfficiencies& eff) {
    if (source_watts < 0.0) {
        throw std::domain_error("power_chain: negative source power: " +
                                std::to_string(source_watts));
    }
    PowerChain chain;
    chain.source = source_watts;
    chain.transmit = chain.source * eff.electro_optical;
    chain.receiver_beam = chain.transmit * eff.transmission;
    chain.receiver_electrical = chain.receiver_beam * eff.photoelectric;
    return chain;
}

}  // namespace rbc
