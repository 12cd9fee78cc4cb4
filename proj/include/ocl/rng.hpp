#pragma once

#include <cstdint>

namespace ocl {

/// SplitMix64: the counter-based generator behind every seeded construction
/// in this library. Chosen for byte-identical streams across platforms and
/// standard libraries; the draw protocol below is part of the instance
/// format contract, so regenerating with the same seed reproduces instances
/// exactly.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0,1) from the top 53 bits.
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform in [0, bound) by modulo reduction (bias is negligible for the
    /// desk-scale bounds used here and keeps the protocol trivial to state).
    int next_below(int bound) {
        return bound > 0 ? static_cast<int>(next() % static_cast<std::uint64_t>(bound)) : 0;
    }

private:
    std::uint64_t state_;
};

} // namespace ocl
