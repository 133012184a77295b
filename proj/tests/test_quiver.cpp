#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fsq/quiver.hpp"
#include "fsq/sampler.hpp"

using namespace fsq;

namespace {

// The k=1 ideal-sheaf representation on the P2 quiver, d = (1,3,1):
// a-columns (-1,0,0), (0,-1,0), (0,0,0); b-rows (0,-1,0), (1,0,0), (0,0,1).
Representation ideal_sheaf_rep(const Quiver& q) {
    Representation rep = zero_representation(q, {1, 3, 1});
    rep.mats[0] = RationalMatrix::from_longs(3, 1, {-1, 0, 0});
    rep.mats[1] = RationalMatrix::from_longs(3, 1, {0, -1, 0});
    rep.mats[2] = RationalMatrix::from_longs(3, 1, {0, 0, 0});
    rep.mats[3] = RationalMatrix::from_longs(1, 3, {0, -1, 0});
    rep.mats[4] = RationalMatrix::from_longs(1, 3, {1, 0, 0});
    rep.mats[5] = RationalMatrix::from_longs(1, 3, {0, 0, 1});
    return rep;
}

NumericalClass cls(SurfaceTag tag, long rank, std::vector<long> c1, long chi) {
    return NumericalClass{tag, rank, divisor(tag, std::move(c1)), chi};
}

std::vector<long> class_coordinates(const NumericalClass& v) {
    std::vector<long> coords{v.rank};
    coords.insert(coords.end(), v.c1.coords.begin(), v.c1.coords.end());
    coords.push_back(v.chi);
    return coords;
}

}  // namespace

TEST_CASE("presets") {
    auto [q2, j2] = preset_p2();
    CHECK(q2.arrows.size() == 6);
    CHECK(j2.relations.size() == 6);
    for (const auto& rel : j2.relations) {
        CHECK(relation_source(q2, rel) == 0);
        CHECK(relation_target(q2, rel) == 2);
    }

    auto [qq, jq] = preset_p1xp1();
    CHECK(qq.arrows.size() == 8);
    CHECK(jq.relations.size() == 4);
    for (const auto& rel : jq.relations) {
        CHECK(relation_source(qq, rel) == 0);
        CHECK(relation_target(qq, rel) == 3);  // the sink in matrix-row vertex order
    }
}

TEST_CASE("check_relations") {
    auto [q, j] = preset_p2();
    CHECK(check_relations(q, j, zero_representation(q, {2, 3, 2})).ok);
    CHECK(check_relations(q, j, ideal_sheaf_rep(q)).ok);

    Representation bad = zero_representation(q, {1, 1, 1});
    for (auto& m : bad.mats) m = RationalMatrix::from_longs(1, 1, {1});
    auto verdict = check_relations(q, j, bad);
    CHECK(!verdict.ok);
    CHECK(!verdict.violated.empty());
}

TEST_CASE("relation check is invariant under the vertex group action") {
    auto [q, j] = preset_p2();
    Representation rep = ideal_sheaf_rep(q);
    SeededSampler sampler(21);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<RationalMatrix> g, ginv;
        for (long d : rep.dims) {
            auto m = sampler.next_invertible_matrix(static_cast<std::size_t>(d));
            ginv.push_back(*inverse(m));
            g.push_back(std::move(m));
        }
        Representation conj = rep;
        for (std::size_t ai = 0; ai < q.arrows.size(); ++ai) {
            const Arrow& a = q.arrows[ai];
            conj.mats[ai] = g[a.dst] * rep.mats[ai] * ginv[a.src];
        }
        CHECK(check_relations(q, j, conj).ok);
    }
}

TEST_CASE("hom_space") {
    auto [q, j] = preset_p2();
    Representation simple = zero_representation(q, {1, 0, 0});
    CHECK(hom_space(q, simple, simple).dim == 1);

    Representation zero = zero_representation(q, {0, 0, 0});
    CHECK(hom_space(q, zero, ideal_sheaf_rep(q)).dim == 0);

    // identity intertwiner always present
    Representation rep = ideal_sheaf_rep(q);
    CHECK(hom_space(q, rep, rep).dim >= 1);

    Representation mid = zero_representation(q, {0, 1, 0});
    auto h = hom_space(q, mid, rep);
    // every intertwiner (0,phi,0) needs b-rows to kill phi's image; solved exactly
    CHECK(h.dim == kernel_basis(RationalMatrix::vstack(
                       {rep.mats[3], rep.mats[4], rep.mats[5]}, 3))
                       .size());
}

TEST_CASE("is_isomorphic") {
    auto [q, j] = preset_p2();
    Representation rep = ideal_sheaf_rep(q);
    CHECK(is_isomorphic(q, rep, rep));

    Representation r1 = zero_representation(q, {1, 1, 0});
    r1.mats[0] = RationalMatrix::from_longs(1, 1, {1});
    Representation r2 = zero_representation(q, {1, 1, 0});
    r2.mats[0] = RationalMatrix::from_longs(1, 1, {2});
    CHECK(is_isomorphic(q, r1, r2));

    Representation r3 = zero_representation(q, {1, 1, 0});
    r3.mats[1] = RationalMatrix::from_longs(1, 1, {1});
    CHECK(!is_isomorphic(q, r1, r3));
}

TEST_CASE("is_isomorphic is reflexive and symmetric on a pool") {
    auto [q, j] = preset_p2();
    SeededSampler sampler(22);
    std::vector<Representation> pool;
    for (int n = 0; n < 20; ++n) {
        Representation rep = zero_representation(q, {1, 1, 1});
        for (auto& m : rep.mats) m = sampler.next_matrix(1, 1);
        pool.push_back(std::move(rep));
    }
    for (const auto& rep : pool) CHECK(is_isomorphic(q, rep, rep));
    for (std::size_t a = 0; a < pool.size(); a += 5)
        for (std::size_t b = 0; b < pool.size(); b += 7)
            CHECK(is_isomorphic(q, pool[a], pool[b]) == is_isomorphic(q, pool[b], pool[a]));
}

TEST_CASE("euler_form pinned values") {
    auto [q2, j2] = preset_p2();
    CHECK(euler_form(q2, j2, {1, 3, 1}, {1, 3, 1}) == -1);
    CHECK(euler_form(q2, j2, {0, 0, 0}, {1, 3, 1}) == 0);

    auto [qq, jq] = preset_p1xp1();
    CHECK(euler_form(qq, jq, {1, 2, 1, 1}, {1, 2, 1, 1}) == -1);
}

TEST_CASE("dimension vectors: paper matrix values") {
    CHECK(dimension_vector(SurfaceTag::P2, cls(SurfaceTag::P2, 1, {0}, 0)) == DimVector{1, 3, 1});
    CHECK(dimension_vector(SurfaceTag::P2, cls(SurfaceTag::P2, 1, {0}, 1)) == DimVector{0, 1, 0});
    CHECK(dimension_vector(SurfaceTag::P1xP1, cls(SurfaceTag::P1xP1, 1, {0, 0}, 1)) ==
          DimVector({0, 1, 0, 0}));

    auto m2 = dimension_vector_matrix(SurfaceTag::P2);
    CHECK(m2 == RationalMatrix::from_longs(3, 3, {1, 2, -1, 3, 3, -2, 1, 1, -1}));
    auto mq = dimension_vector_matrix(SurfaceTag::P1xP1);
    CHECK(mq == RationalMatrix::from_longs(4, 4,
                                           {1, 1, 2, -1, 2, 0, 2, -1, 1, 1, 1, -1, 1, 0, 1, -1}));

    // matrix * (1,0,1) = (0,1,0)
    RationalMatrix v(3, 1, {Scalar(1), Scalar(0), Scalar(1)});
    auto prod = m2 * v;
    CHECK(prod.at(0, 0) == 0);
    CHECK(prod.at(1, 0) == 1);
    CHECK(prod.at(2, 0) == 0);
}

TEST_CASE("dimension vector equals matrix product on random classes") {
    SeededSampler sampler(23);
    for (SurfaceTag tag : {SurfaceTag::P2, SurfaceTag::P1xP1}) {
        auto matrix = dimension_vector_matrix(tag);
        auto collection = exceptional_collection(tag);
        for (int trial = 0; trial < 50; ++trial) {
            NumericalClass v = sampler.next_class(tag);
            auto coords = class_coordinates(v);
            ChernCharacter chv = to_chern(v);
            for (std::size_t i = 0; i < collection.size(); ++i) {
                Scalar via_matrix(0);
                for (std::size_t c = 0; c < coords.size(); ++c)
                    via_matrix += matrix.at(i, c) * Scalar(coords[c]);
                CHECK(-chi_pair(collection[i], chv) == via_matrix);
            }
        }
    }
}

TEST_CASE("dimension vector rejects bad classes") {
    // class of O(1): entries go negative
    CHECK_THROWS(dimension_vector(SurfaceTag::P2, cls(SurfaceTag::P2, 1, {1}, 3)));
}

TEST_CASE("euler form dictionary on random pairs") {
    SeededSampler sampler(24);
    auto [q2, j2] = preset_p2();
    auto [qq, jq] = preset_p1xp1();
    for (int trial = 0; trial < 50; ++trial) {
        for (SurfaceTag tag : {SurfaceTag::P2, SurfaceTag::P1xP1}) {
            const Quiver& q = tag == SurfaceTag::P2 ? q2 : qq;
            const RelationSet& j = tag == SurfaceTag::P2 ? j2 : jq;
            NumericalClass v = sampler.next_class(tag);
            NumericalClass w = sampler.next_class(tag);
            auto matrix = dimension_vector_matrix(tag);
            auto dvec = [&](const NumericalClass& x) {
                auto coords = class_coordinates(x);
                DimVector d;
                for (std::size_t r = 0; r < coords.size(); ++r) {
                    Scalar entry(0);
                    for (std::size_t c = 0; c < coords.size(); ++c)
                        entry += matrix.at(r, c) * Scalar(coords[c]);
                    d.push_back(to_long(entry));
                }
                return d;
            };
            CHECK(euler_form(q, j, dvec(v), dvec(w)) ==
                  to_long(chi_pair(to_chern(v), to_chern(w))));
        }
    }
}

TEST_CASE("path space dimensions") {
    auto [q2, j2] = preset_p2();
    CHECK(path_space_dim(q2, j2, 0, 1) == 3);
    CHECK(path_space_dim(q2, j2, 0, 2) == 3);  // 9 paths - 6 relations
    CHECK(path_space_dim(q2, j2, 0, 0) == 1);
    CHECK(path_space_dim(q2, j2, 1, 1) == 1);
    CHECK(path_space_dim(q2, j2, 2, 0) == 0);

    auto [qq, jq] = preset_p1xp1();
    CHECK(path_space_dim(qq, jq, 0, 3) == 4);  // 8 paths - 4 relations
    CHECK(path_space_dim(qq, jq, 0, 1) == 2);
    CHECK(path_space_dim(qq, jq, 0, 2) == 2);
    CHECK(path_space_dim(qq, jq, 3, 3) == 1);
}
