#pragma once

#include <cstdint>

namespace polgame {

/// SplitMix64 (Steele, Lea, Flood 2014). Chosen over std::mt19937 because its
/// output for a given seed is identical on every platform and toolchain, which
/// keeps frozen test expectations portable.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform draw from 0..bound inclusive (plain modulo; the tiny bias is
    /// irrelevant for instance generation and keeps the stream reproducible).
    std::uint64_t below(std::uint64_t bound_inclusive) {
        return next() % (bound_inclusive + 1);
    }

private:
    std::uint64_t state_;
};

} // namespace polgame
