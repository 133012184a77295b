#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fsq/adhm.hpp"
#include "fsq/complex.hpp"
#include "fsq/quiver.hpp"
#include "fsq/surface.hpp"

namespace fsq {

struct BatteryEntry {
    std::string label;
    long h0;
    long h2;
};

struct VanishingReport {
    std::vector<BatteryEntry> entries;
    bool pass;  // all entries zero
};

// h^0 and h^2 of E tensor E_i^dual for every member of the preset collection.
// Line-bundle members are handled by twisting; the tangent-bundle member on
// P2 by tensoring with the two-term resolution [O(-1)^3 -> O] of Omega.
VanishingReport vanishing_battery(const LineBundleComplex& c, SurfaceTag surface);

// the resolution of Omega_P2 used for the tangent battery entry
LineBundleComplex omega_resolution_p2();

// r x r invertible matrix expressing a computed basis of the sections of the
// restriction against the canonical fiber basis; rows index the sections.
struct Framing {
    RationalMatrix matrix;
};

struct TrivialityResult {
    bool trivial;
    long rank;
    long restricted_degree;
    long h0_negative_twist;
    std::optional<Framing> framing;  // present iff trivial
};

// trivial iff the restriction has degree 0 and no sections after the (-1)
// twist; throws when the restricted homology is not locally free.
TrivialityResult triviality_on_curve(const LineBundleComplex& c, const CurveModel& c0);

// coefficient extraction: a_m = coefficient of x_{m-1} in alpha, b_m in beta,
// for a monad in the normal form O(-1)^d0 -> O^d1 -> O(1)^d2 on P2
Representation rep_from_monad(const LineBundleComplex& monad);

// assembly: alpha = sum a_m x_{m-1}, beta = sum b_m x_{m-1}; exact inverse
LineBundleComplex monad_from_rep(const Representation& rep);

struct FramedHomResult {
    bool has_solution;         // the affine framed-compatibility system is consistent
    std::size_t dim;           // dimension of the framed solution space
    std::size_t unframed_dim;  // chain maps modulo homotopy (homotopies vanish here)
};

FramedHomResult framed_hom(const LineBundleComplex& monad_e, const Framing& phi_e,
                           const LineBundleComplex& monad_f, const Framing& phi_f);

// dimension of the space of chain maps E -> F whose restriction to the
// framing line (the W block of the middle component) vanishes; restriction
// is injective on homomorphisms exactly when this is zero
std::size_t restriction_kernel_dim(const LineBundleComplex& monad_e,
                                   const LineBundleComplex& monad_f);

struct HilbertDemoReport {
    std::size_t k = 0;
    bool equation_ok = false;
    bool stable = false;
    bool fiber_profile_ok = false;
    bool triviality_ok = false;
    bool battery_pass = false;
    bool relations_ok = false;
    bool roundtrip_ok = false;
    bool pass = false;  // all checks after a stable datum
};

// end-to-end pipeline for ideal sheaves of point configurations in the
// affine chart: datum -> stability -> monad -> fiber profile, triviality,
// vanishing battery, representation round trip
HilbertDemoReport hilbert_demo(const std::vector<std::pair<Scalar, Scalar>>& points,
                               std::uint64_t seed = SeededSampler::kDefaultSeed);

}  // namespace fsq
