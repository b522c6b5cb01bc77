#pragma once

#include <cstdint>
#include <random>

namespace topiclab {

/// Seeded random number generator with fixed bit-to-variate conversions.
///
/// The mt19937_64 stream is specified by the standard, and the conversions
/// below avoid std::uniform_*_distribution, whose output is implementation
/// defined. Identical seeds therefore give identical draws on every platform,
/// which the determinism contracts of the fitting routines rely on.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    /// Uniform double in [0, 1).
    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    /// Uniform double in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform integer in [0, n). Requires n > 0.
    int uniform_int(int n) {
        const auto wide = static_cast<unsigned __int128>(gen_());
        return static_cast<int>((wide * static_cast<std::uint64_t>(n)) >> 64);
    }

private:
    std::mt19937_64 gen_;
};

}  // namespace topiclab
