#pragma once

#include <random>

#include "fsq/matrix.hpp"
#include "fsq/surface.hpp"

namespace fsq {

// Deterministic stream of small rationals, matrices and numerical classes.
// Numerators stay in [-5,5] and denominators in {1,2,3} so exact arithmetic
// stays cheap downstream.
class SeededSampler {
public:
    explicit SeededSampler(std::uint64_t seed = kDefaultSeed) : rng_(seed) {}

    static constexpr std::uint64_t kDefaultSeed = 0x5eaf0b9du;

    long next_int(long lo, long hi) {
        return std::uniform_int_distribution<long>(lo, hi)(rng_);
    }

    Scalar next_scalar() {
        long num = next_int(-5, 5);
        long den = next_int(1, 3);
        return make_scalar(num, den);
    }

    Scalar next_nonzero_scalar() {
        for (;;) {
            Scalar s = next_scalar();
            if (s != 0) return s;
        }
    }

    RationalMatrix next_matrix(std::size_t rows, std::size_t cols) {
        RationalMatrix m(rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = next_scalar();
        return m;
    }

    RationalMatrix next_invertible_matrix(std::size_t n) {
        for (;;) {
            RationalMatrix m = next_matrix(n, n);
            if (rank(m) == n) return m;
        }
    }

    NumericalClass next_class(SurfaceTag surface, long box = 5) {
        std::vector<long> c1(surface_info(surface).picard_rank);
        for (auto& c : c1) c = next_int(-box, box);
        return NumericalClass{surface, next_int(-box, box), DivisorClass{surface, std::move(c1)},
                              next_int(-box, box)};
    }

private:
    std::mt19937_64 rng_;
};

}  // namespace fsq
