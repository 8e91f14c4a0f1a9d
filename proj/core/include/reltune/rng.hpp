#pragma once

#include <cstdint>
#include <random>
#include <span>

namespace reltune {

/// Deterministic random source used everywhere a draw is needed.
///
/// The raw mt19937_64 output stream is fixed by the standard; the
/// distribution helpers are hand-rolled because the std ones are
/// implementation-defined, and identical seeds must yield identical draws
/// on every toolchain.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Raw 64 random bits.
    std::uint64_t next() { return engine_(); }

    /// Uniform draw from [0, range); rejection sampling, unbiased.
    std::uint64_t bounded(std::uint64_t range);

    /// Uniform integer in [lo, hi], both inclusive.
    int uniform_int(int lo, int hi);

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Index drawn proportionally to non-negative weights (sum must be > 0).
    std::size_t categorical(std::span<const double> weights);

    /// Number of successes in n Bernoulli(p) draws.
    std::uint64_t binomial(std::uint64_t n, double p);

private:
    std::mt19937_64 engine_;
};

} // namespace reltune
