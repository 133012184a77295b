#pragma once

#include <string>
#include <vector>

#include "fsq/matrix.hpp"
#include "fsq/surface.hpp"

namespace fsq {

struct Arrow {
    int id;
    int src;
    int dst;
};

struct Quiver {
    int vertex_count;
    std::vector<Arrow> arrows;
    std::vector<std::string> arrow_names;  // parallel to arrows, for reports

    const Arrow& arrow_by_id(int id) const;
};

// One relation: sum of (coefficient, path); a path is a list of arrow ids
// in order of traversal, all paths sharing source and target.
struct PathTerm {
    Scalar coeff;
    std::vector<int> path;
};
using Relation = std::vector<PathTerm>;

struct RelationSet {
    std::vector<Relation> relations;
};

int relation_source(const Quiver& q, const Relation& rel);
int relation_target(const Quiver& q, const Relation& rel);

using DimVector = std::vector<long>;  // nonnegative, one entry per vertex

struct Representation {
    DimVector dims;
    std::vector<RationalMatrix> mats;  // one per arrow, indexed by arrow id;
                                       // shape d_dst x d_src
};

Representation zero_representation(const Quiver& q, DimVector dims);

// The P2 quiver: 0 =a1,a2,a3=> 1 =b1,b2,b3=> 2 with the six relations
// b_i a_j + b_j a_i for i <= j (the i = j generator stored as b_i a_i).
std::pair<Quiver, RelationSet> preset_p2();

// The P1xP1 square quiver: a1_1,a1_2: 0->1, a2_1,a2_2: 0->2,
// b1_1,b1_2: 1->3, b2_1,b2_2: 2->3, with the four relations
// b1_i a1_j + b2_j a2_i for i,j in {1,2}. Vertex i carries the i-th
// member of the exceptional collection, matching the dimension-vector rows.
std::pair<Quiver, RelationSet> preset_p1xp1();

struct RelationCheck {
    bool ok;
    std::vector<std::size_t> violated;  // indices into the relation list
};

RelationCheck check_relations(const Quiver& q, const RelationSet& rels, const Representation& rep);

// Intertwiners rep1 -> rep2: one matrix per vertex solving
// phi_dst M1_a = M2_a phi_src for every arrow a.
struct HomSpace {
    std::size_t dim;
    // basis[k][v] is the vertex-v block of the k-th basis intertwiner
    std::vector<std::vector<RationalMatrix>> basis;
};

HomSpace hom_space(const Quiver& q, const Representation& rep1, const Representation& rep2);

bool is_isomorphic(const Quiver& q, const Representation& rep1, const Representation& rep2,
                   unsigned seed = 20240815);

// <d,e> = sum_i d_i e_i - sum_arrows d_src e_dst + sum_relations d_src e_dst.
long euler_form(const Quiver& q, const RelationSet& rels, const DimVector& d, const DimVector& e);

// d_i = -chi(E_i, v) for the preset collection of the surface.
// Throws when an entry is negative (class not represented in the heart).
DimVector dimension_vector(SurfaceTag surface, const NumericalClass& v);

// The closed-form matrix sending (rk, c1 coords, chi) to the dimension vector.
RationalMatrix dimension_vector_matrix(SurfaceTag surface);

// Dimension of paths i -> j in the path algebra modulo the relation ideal.
long path_space_dim(const Quiver& q, const RelationSet& rels, int i, int j);

}  // namespace fsq
