#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fsq/poly.hpp"
#include "fsq/rational.hpp"

namespace fsq {

enum class SurfaceTag { P2, P1xP1 };

std::string to_string(SurfaceTag tag);
SurfaceTag surface_from_string(const std::string& s);

// Static intersection-theory data of the two target surfaces.
// P2: Picard basis H, H.H = 1, K = -3H.
// P1xP1: Picard basis H, F with H.H = F.F = 0, H.F = 1, K = -2H - 2F.
struct SurfaceKind {
    SurfaceTag tag;
    int picard_rank;
    std::vector<std::vector<long>> intersection_matrix;
    std::vector<long> canonical_class;
    int chart_count;
};

const SurfaceKind& surface_info(SurfaceTag tag);

struct DivisorClass {
    SurfaceTag surface;
    std::vector<long> coords;  // length = picard rank

    bool operator==(const DivisorClass& other) const = default;
};

DivisorClass divisor(SurfaceTag surface, std::vector<long> coords);
DivisorClass canonical_divisor(SurfaceTag surface);
long intersect(const DivisorClass& d, const DivisorClass& e);

struct ChernCharacter {
    SurfaceTag surface;
    Scalar rank;
    DivisorClass c1;
    Scalar ch2;

    bool operator==(const ChernCharacter& other) const = default;
};

// (rank, c1, chi): the coordinate system the dimension-vector matrices act on.
struct NumericalClass {
    SurfaceTag surface;
    long rank;
    DivisorClass c1;
    long chi;

    bool operator==(const NumericalClass& other) const = default;
};

ChernCharacter chern_of_line_bundle(const DivisorClass& d);
ChernCharacter chern_of_structure_sheaf(SurfaceTag surface);
ChernCharacter chern_dual(const ChernCharacter& v);           // negates c1, keeps ch2
ChernCharacter chern_product(const ChernCharacter& v, const ChernCharacter& w);
ChernCharacter chern_sum(const ChernCharacter& v, const ChernCharacter& w);

// Hirzebruch-Riemann-Roch: chi = integral of ch . td(X).
// P2:     chi = ch2 + (3/2) c1.H + rank
// P1xP1:  chi = ch2 + c1.(H+F) + rank
Scalar chi(const ChernCharacter& ch);

// chi(v, w) = integral of ch(v)^dual . ch(w) . td(X).
Scalar chi_pair(const ChernCharacter& v, const ChernCharacter& w);

ChernCharacter to_chern(const NumericalClass& v);
NumericalClass to_numerical(const ChernCharacter& ch);  // requires integral rank and chi

NumericalClass twist(const NumericalClass& v, const DivisorClass& d);

// The full strong exceptional collections backing the dimension-vector
// dictionary, indexed so that d_i = -chi(E_i, v):
//   P2:    E_0 = O(2), E_1 = tangent bundle, E_2 = O(1)
//   P1xP1: E_0 = O(2,1), E_1 = O(2,0), E_2 = O(1,1), E_3 = O(1,0)
std::vector<ChernCharacter> exceptional_collection(SurfaceTag surface);
std::vector<std::string> exceptional_collection_labels(SurfaceTag surface);

// A rational curve P1 -> X given by one homogeneous form in (s,t) per
// ambient homogeneous coordinate of X.
struct CurveModel {
    DivisorClass cls;
    std::vector<Polynomial> parametrization;  // polynomials in 2 variables (s,t)
};

// Validates the degree bookkeeping: group-g components must be homogeneous
// of degree (basis divisor of g) . cls.
CurveModel make_curve(DivisorClass cls, std::vector<Polynomial> parametrization);

CurveModel line_at_infinity();   // x2 = 0 on P2, parametrized [s:t:0]
CurveModel diagonal_curve();     // the diagonal of P1xP1, ([s:t],[s:t])

struct HypothesisEntry {
    DivisorClass member;
    long pairing;       // D_i . C0
    long upper_bound;   // -K_X . C0
    bool lower_ok;      // 0 < D_i . C0
    bool upper_ok;      // D_i . C0 < -K_X . C0
};

struct HypothesisReport {
    std::vector<HypothesisEntry> entries;
    std::optional<DivisorClass> degree_one_class;  // L with c1(L).C0 = 1, |coords| <= 3
    bool pass;  // all inequalities hold and L exists
};

HypothesisReport hypothesis_check(SurfaceTag surface, const CurveModel& c0,
                                  const std::vector<DivisorClass>& collection);

}  // namespace fsq
