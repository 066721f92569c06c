#pragma once

#include "dp5/picard_lattice.hpp"

#include <random>

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

inline dp5::DivisorClass random_class(Rng& rng, long bound) {
    return dp5::make_class(uniform(rng, -bound, bound), uniform(rng, -bound, bound), uniform(rng, -bound, bound),
                           uniform(rng, -bound, bound), uniform(rng, -bound, bound));
}

/// Exact determinant by cofactor expansion along the first row.
template <std::size_t N>
dp5::Integer det_n(const std::array<std::array<dp5::Integer, N>, N>& m) {
    if constexpr (N == 1) {
        return m[0][0];
    } else {
        dp5::Integer s = 0;
        for (std::size_t j = 0; j < N; ++j) {
            std::array<std::array<dp5::Integer, N - 1>, N - 1> minor{};
            for (std::size_t r = 1; r < N; ++r)
                for (std::size_t c = 0, k = 0; c < N; ++c)
                    if (c != j) minor[r - 1][k++] = m[r][c];
            dp5::Integer term = m[0][j] * det_n<N - 1>(minor);
            s += (j % 2 == 0) ? term : dp5::Integer(-term);
        }
        return s;
    }
}

inline dp5::Integer det5(const std::array<std::array<dp5::Integer, 5>, 5>& m) { return det_n<5>(m); }
