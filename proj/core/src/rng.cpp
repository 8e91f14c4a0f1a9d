#include "reltune/rng.hpp"

#include <stdexcept>

namespace reltune {

std::uint64_t Rng::bounded(std::uint64_t range) {
    if (range == 0) {
        throw std::invalid_argument("Rng::bounded: range must be positive");
    }
    // Values in [threshold, 2^64) form a whole number of blocks of `range`.
    const std::uint64_t threshold = (0 - range) % range;
    for (;;) {
        const std::uint64_t x = next();
        if (x >= threshold) {
            return x % range;
        }
    }
}

int Rng::uniform_int(int lo, int hi) {
    if (lo > hi) {
        throw std::invalid_argument("Rng::uniform_int: lo > hi");
    }
    const auto range = static_cast<std::uint64_t>(static_cast<std::int64_t>(hi) -
                                                  static_cast<std::int64_t>(lo) + 1);
    return lo + static_cast<int>(bounded(range));
}

std::size_t Rng::categorical(std::span<const double> weights) {
    double total = 0.0;
    for (double w : weights) {
        if (w < 0.0) {
            throw std::invalid_argument("Rng::categorical: negative weight");
        }
        total += w;
    }
    if (!(total > 0.0)) {
        throw std::invalid_argument("Rng::categorical: weights sum to zero");
    }
    const double u = uniform01() * total;
    double cum = 0.0;
    for (std::size_t i = 0; i + 1 < weights.size(); ++i) {
        cum += weights[i];
        if (u < cum) {
            return i;
        }
    }
    return weights.size() - 1;
}

std::uint64_t Rng::binomial(std::uint64_t n, double p) {
    if (p < 0.0 || p > 1.0) {
        throw std::invalid_argument("Rng::binomial: p outside [0, 1]");
    }
    std::uint64_t successes = 0;
    for (std::uint64_t i = 0; i < n; ++i) {
        if (uniform01() < p) {
            ++successes;
        }
    }
    return successes;
}

} // namespace reltune
