#pragma once

#include <utility>
#include <vector>

#include "fsq/complex.hpp"
#include "fsq/matrix.hpp"
#include "fsq/sampler.hpp"

namespace fsq {

// Linear datum (B1, B2, i, j) on V = C^k, W = C^r.
struct AdhmDatum {
    std::size_t k = 0;
    std::size_t r = 1;
    RationalMatrix b1, b2;  // k x k
    RationalMatrix i;       // k x r
    RationalMatrix j;       // r x k
};

AdhmDatum zero_adhm(std::size_t k, std::size_t r);

// throws std::invalid_argument when the matrix shapes are off
void validate_adhm(const AdhmDatum& d);

RationalMatrix adhm_residual(const AdhmDatum& d);  // [B1,B2] + i j
bool check_equation(const AdhmDatum& d);

// stable: the smallest (B1,B2)-invariant subspace containing im(i) is V;
// costable: the largest invariant subspace inside ker(j) is 0.
bool is_stable(const AdhmDatum& d);
bool is_costable(const AdhmDatum& d);

// The monad O(-1)^k -> O^(2k+r) -> O(1)^k with ell_infty = {x2 = 0}:
// alpha = (B1 x2 - x0; B2 x2 - x1; j x2), beta = (-(B2 x2 - x1) | B1 x2 - x0 | i x2),
// so beta alpha = x2^2 ([B1,B2] + ij). Throws when the equation fails.
LineBundleComplex monad_from_adhm(const AdhmDatum& d);

struct FiberHomology {
    long dim;
    // basis of a complement of im alpha(p) inside ker beta(p)
    std::vector<std::vector<Scalar>> basis;
};

FiberHomology fiber_homology(const LineBundleComplex& monad, const std::vector<Scalar>& point);

// Canonical trivialization over ell_infty: the fiber homology is the W-block
// {(0,0,w)} at every point of the line; verified at five sample points.
struct CanonicalFraming {
    std::size_t rank;
    std::vector<std::vector<Scalar>> sections;    // the W unit vectors in the middle term
    std::vector<RationalMatrix> projections;      // invertible r x r, one per sample point
};

CanonicalFraming canonical_framing(const AdhmDatum& d);

std::vector<std::vector<Scalar>> ell_infty_sample_points();

// One stable solution per partition of k (Young-diagram shift operators).
std::vector<AdhmDatum> torus_fixed_points(std::size_t k, std::size_t r = 1);

// B1 = diag(x_m), B2 = diag(y_m), i = ones, j = 0; stable iff points distinct.
AdhmDatum adhm_from_points(const std::vector<std::pair<Scalar, Scalar>>& points);

AdhmDatum gl_action(const RationalMatrix& g, const AdhmDatum& d);

struct TangentReport {
    std::size_t rank_dmu;
    std::size_t stabilizer_dim;
    long tangent_dim;  // (2k^2 + 2kr - rank_dmu) - (k^2 - stabilizer_dim)
};

TangentReport tangent_report(const AdhmDatum& d);

// diagonal commuting B's with pairwise distinct eigenvalue pairs and a dense
// i (j = 0): an exact stable solution family for sampling
AdhmDatum random_stable_adhm(SeededSampler& sampler, std::size_t k, std::size_t r);

AdhmDatum random_adhm(SeededSampler& sampler, std::size_t k, std::size_t r);

}  // namespace fsq
