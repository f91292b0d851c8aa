#pragma once

#include <cstdint>

namespace civ {

/*
 * SplitMix64. State advances by 0x9E3779B97F4A7C15 and each output is the
 * standard 30/27/31 xor-shift-multiply finalizer of the new state. Bounded
 * draws use the high half of a 64x64 -> 128-bit product, so streams are
 * reproducible across implementations.
 */
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : m_state(seed) {}

    uint64_t next() {
        uint64_t z = (m_state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, bound), bound >= 1.
    uint64_t below(uint64_t bound) { return static_cast<uint64_t>((static_cast<__uint128_t>(next()) * bound) >> 64); }

    /// Uniform in [0, max] inclusive.
    uint64_t up_to(uint64_t max) { return max == ~uint64_t(0) ? next() : below(max + 1); }

    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    uint64_t m_state;
};

}  // namespace civ
