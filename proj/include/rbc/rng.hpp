#pragma once

#include <cstdint>

namespace rbc {

/// Deterministic pseudo-random stream (PCG32, O'Neill's minimal variant).
///
/// Identical (seed, stream) pairs produce bit-identical draw sequences on
/// every platform; distinct stream indices select statistically independent
/// sequences from the same seed. One simulation trial owns one stream and
/// consumes it in program order.
class RngStream {
public:
    RngStream(std::uint64_t seed, std::uint64_t stream) {
        inc_ = (stream << 1u) | 1u;
        state_ = 0u;
        next_u32();
        state_ += seed;
        next_u32();
    }

    std::uint32_t next_u32() {
        const std::uint64_t old = state_;
        state_ = old * 6364136223846793005ULL + inc_;
        const auto xorshifted =
            static_cast<std::uint32_t>(((old >> 18u) ^ old) >> 27u);
        const auto rot = static_cast<std::uint32_t>(old >> 59u);
        return (xorshifted >> rot) | (xorshifted << ((32u - rot) & 31u));
    }

    /// Uniform double in [0, 1).
    double next_unit() { return next_u32() * 0x1.0p-32; }

    /// Unbiased uniform integer in [0, bound).
    std::uint32_t next_below(std::uint32_t bound) {
        const std::uint32_t threshold = (-bound) % bound;
        for (;;) {
            const std::uint32_t r = next_u32();
            if (r >= threshold) return r % bound;
        }
    }

private:
    std::uint64_t state_;
    std::uint64_t inc_;
};

}  // namespace rbc
