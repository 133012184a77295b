#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fsq/poly.hpp"
#include "fsq/surface.hpp"

namespace fsq {

// The three ambient spaces the engine knows: P1 (curve), P2, P1xP1.
enum class Space { P1, P2, P1xP1 };

std::string to_string(Space space);
Space space_from_string(const std::string& s);
Space space_of_surface(SurfaceTag tag);

// Toric description: homogeneous variables split into groups (one per
// Picard generator); a chart inverts one variable per group.
struct SpaceInfo {
    std::size_t nvars;
    std::size_t ngroups;
    std::vector<std::size_t> var_group;            // group of each variable
    std::vector<std::vector<std::size_t>> charts;  // inverted variables per chart
    std::vector<std::string> var_names;
};

const SpaceInfo& space_info(Space space);

using Twist = std::vector<int>;  // one coordinate per group

struct PolyMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<Polynomial> entries;  // row-major

    PolyMatrix() = default;
    PolyMatrix(std::size_t r, std::size_t c, std::size_t nvars)
        : rows(r), cols(c), entries(r * c, Polynomial(nvars)) {}
    const Polynomial& at(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }
    Polynomial& at(std::size_t r, std::size_t c) { return entries[r * cols + c]; }
};

PolyMatrix poly_matmul(const PolyMatrix& a, const PolyMatrix& b);

// Bounded complex of direct sums of line bundles. terms[i] lives in
// cohomological position min_position + i; maps[i]: terms[i] -> terms[i+1].
// Entry (r,c) of a map is homogeneous of multidegree twist(target row) -
// twist(source column) in every variable group, and must vanish whenever
// that multidegree has a negative coordinate.
struct LineBundleComplex {
    Space space = Space::P2;
    int min_position = 0;
    std::vector<std::vector<Twist>> terms;
    std::vector<PolyMatrix> maps;

    int max_position() const { return min_position + static_cast<int>(terms.size()) - 1; }
};

// Validates degrees and the symbolic complex condition (consecutive
// compositions identically zero); throws on violation.
LineBundleComplex make_complex(Space space, int min_position,
                               std::vector<std::vector<Twist>> terms,
                               std::vector<PolyMatrix> maps);

LineBundleComplex single_bundle_complex(Space space, Twist twist, int position = 0);

// Tensors every term with O(twist).
LineBundleComplex twist_complex(const LineBundleComplex& c, const Twist& twist);

// Total complex of the tensor product of two complexes on the same space.
LineBundleComplex tensor_complexes(const LineBundleComplex& a, const LineBundleComplex& b);

// Closed-form cohomology of a single line bundle; vector of h^0..h^dim.
// P2 from the binomial count plus Serre duality, P1xP1 by Kunneth.
std::vector<long> line_bundle_cohomology(Space space, const Twist& twist);

long chi_line_bundle(Space space, const Twist& twist);

// Sum over positions of (-1)^p sum of chi of the twists.
long euler_characteristic(const LineBundleComplex& c);

struct CohomologyReport {
    std::map<int, long> h;  // only nonzero entries
    long euler = 0;
    bool window_stable = false;
    int window_used = 0;

    long h_at(int n) const {
        auto it = h.find(n);
        return it == h.end() ? 0 : it->second;
    }
};

// Smallest window honoring the invariant N >= 2 + max|twist| + total map degree.
int default_window(const LineBundleComplex& c);

// Truncated Cech hypercohomology over the standard toric cover, computed
// exactly; re-runs at window+2 to set window_stable, and cross-checks the
// alternating sum against euler_characteristic (mismatch throws).
CohomologyReport hypercohomology(const LineBundleComplex& c,
                                 std::optional<int> window = std::nullopt);

// Independent two-row computation for complexes of at most 3 terms on P2
// (line bundles there have no middle cohomology, and the only possible
// higher differential falls out of range). Returns h^n by degree.
std::map<int, long> hypercohomology_two_row_p2(const LineBundleComplex& c);

// Substitutes the curve parametrization; O(D) restricts to O(D . C0).
LineBundleComplex restrict_to_curve(const LineBundleComplex& c, const CurveModel& curve);

// Dimension of the middle homology of the complex at a point (valid for
// complexes of at most three terms around position 0).
long fiber_homology_dim(const LineBundleComplex& c, const std::vector<Scalar>& point);

// Splitting degrees (descending) of the vector bundle presented by a
// complex on P1; throws when the homology is not locally free.
std::vector<int> splitting_type(const LineBundleComplex& c);

}  // namespace fsq
