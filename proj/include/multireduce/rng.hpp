#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace multireduce {

using Rng = std::mt19937_64;

inline Rng make_rng(std::uint64_t seed) { return Rng(seed); }

inline double uniform_real(Rng& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

inline double gaussian(Rng& rng, double mean = 0.0, double stddev = 1.0) {
    return std::normal_distribution<double>(mean, stddev)(rng);
}

inline int rademacher(Rng& rng) { return uniform_int(rng, 0, 1) == 0 ? -1 : 1; }

// Fisher-Yates permutation of 0..n-1.
inline std::vector<int> random_permutation(int n, Rng& rng) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    for (int i = n - 1; i > 0; --i) {
        int j = static_cast<int>(uniform_int(rng, 0, i));
        std::swap(p[i], p[j]);
    }
    return p;
}

// Point uniform in the unit disc (rejection sampling).
inline std::pair<double, double> uniform_disc(Rng& rng) {
    while (true) {
        double x = uniform_real(rng, -1.0, 1.0);
        double y = uniform_real(rng, -1.0, 1.0);
        if (x * x + y * y <= 1.0) return {x, y};
    }
}

}  // namespace multireduce
