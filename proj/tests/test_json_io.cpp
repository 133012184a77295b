#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fsq/heart.hpp"
#include "fsq/json_io.hpp"
#include "fsq/sampler.hpp"

using namespace fsq;
using fsq::io::json;

TEST_CASE("scalar round trip") {
    for (const char* s : {"0", "7", "-3", "5/3", "-22/7"}) {
        Scalar v = scalar_from_string(s);
        CHECK(io::scalar_from_json(io::scalar_to_json(v)) == v);
        CHECK(io::scalar_to_json(v).get<std::string>() == s);
    }
    CHECK(io::scalar_from_json(json(4)) == Scalar(4));
    CHECK_THROWS_AS(io::scalar_from_json(json("1/0")), std::invalid_argument);
    CHECK_THROWS_AS(io::scalar_from_json(json::array()), std::invalid_argument);
}

TEST_CASE("matrix round trip") {
    SeededSampler sampler(61);
    for (int trial = 0; trial < 10; ++trial) {
        auto m = sampler.next_matrix(static_cast<std::size_t>(sampler.next_int(0, 4)),
                                     static_cast<std::size_t>(sampler.next_int(0, 4)));
        CHECK(io::matrix_from_json(io::matrix_to_json(m)) == m);
    }
    json bad = {{"rows", 2}, {"cols", 2}, {"entries", {"1", "2", "3"}}};
    CHECK_THROWS_AS(io::matrix_from_json(bad), std::invalid_argument);
}

TEST_CASE("class round trip") {
    SeededSampler sampler(62);
    for (SurfaceTag surface : {SurfaceTag::P2, SurfaceTag::P1xP1})
        for (int trial = 0; trial < 10; ++trial) {
            NumericalClass v = sampler.next_class(surface);
            CHECK(io::class_from_json(io::class_to_json(v)) == v);
        }
    CHECK_THROWS_AS(io::class_from_json(json{{"surface", "P3"}}), std::invalid_argument);
}

TEST_CASE("quiver and representation round trip") {
    for (auto preset : {preset_p2(), preset_p1xp1()}) {
        auto [q, rels] = preset;
        auto [q2, rels2] = io::quiver_from_json(io::quiver_to_json(q, rels));
        CHECK(q2.vertex_count == q.vertex_count);
        REQUIRE(q2.arrows.size() == q.arrows.size());
        for (std::size_t a = 0; a < q.arrows.size(); ++a) {
            CHECK(q2.arrows[a].id == q.arrows[a].id);
            CHECK(q2.arrows[a].src == q.arrows[a].src);
            CHECK(q2.arrows[a].dst == q.arrows[a].dst);
        }
        REQUIRE(rels2.relations.size() == rels.relations.size());
        for (std::size_t i = 0; i < rels.relations.size(); ++i) {
            REQUIRE(rels2.relations[i].size() == rels.relations[i].size());
            for (std::size_t t = 0; t < rels.relations[i].size(); ++t) {
                CHECK(rels2.relations[i][t].coeff == rels.relations[i][t].coeff);
                CHECK(rels2.relations[i][t].path == rels.relations[i][t].path);
            }
        }
    }

    auto [q, rels] = preset_p2();
    SeededSampler sampler(63);
    Representation rep = zero_representation(q, {1, 3, 1});
    for (auto& m : rep.mats) m = sampler.next_matrix(m.rows(), m.cols());
    auto rep2 = io::rep_from_json(io::rep_to_json(rep));
    CHECK(rep2.dims == rep.dims);
    for (std::size_t a = 0; a < rep.mats.size(); ++a) CHECK(rep2.mats[a] == rep.mats[a]);
}

TEST_CASE("complex round trip preserves hypercohomology") {
    AdhmDatum d = zero_adhm(1, 1);
    d.i.at(0, 0) = 1;
    auto monad = monad_from_adhm(d);
    auto back = io::complex_from_json(io::complex_to_json(monad));
    CHECK(back.space == monad.space);
    CHECK(back.min_position == monad.min_position);
    CHECK(back.terms == monad.terms);
    for (std::size_t m = 0; m < monad.maps.size(); ++m)
        CHECK(back.maps[m].entries == monad.maps[m].entries);
    CHECK(hypercohomology(back).h == hypercohomology(monad).h);

    // Picard-rank-1 twists may be written as bare integers
    json j = io::complex_to_json(single_bundle_complex(Space::P2, {-3}));
    j["terms"][0][0] = -3;
    auto c = io::complex_from_json(j);
    CHECK(c.terms[0][0] == Twist{-3});

    // invalid complexes are rejected on load
    json broken = io::complex_to_json(monad);
    broken["maps"][0]["entries"][0] = json::array(
        {{{"coeff", "1"}, {"exponents", {2, 0, 0}}}});
    CHECK_THROWS_AS(io::complex_from_json(broken), std::invalid_argument);
}

TEST_CASE("adhm round trip") {
    SeededSampler sampler(64);
    AdhmDatum d = random_stable_adhm(sampler, 2, 2);
    auto back = io::adhm_from_json(io::adhm_to_json(d));
    CHECK(back.k == d.k);
    CHECK(back.r == d.r);
    CHECK(back.b1 == d.b1);
    CHECK(back.b2 == d.b2);
    CHECK(back.i == d.i);
    CHECK(back.j == d.j);

    json bad = io::adhm_to_json(d);
    bad["B1"] = io::matrix_to_json(RationalMatrix(1, 1));
    CHECK_THROWS_AS(io::adhm_from_json(bad), std::invalid_argument);
}

TEST_CASE("serialized output is deterministic") {
    auto [q, rels] = preset_p1xp1();
    CHECK(io::quiver_to_json(q, rels).dump() == io::quiver_to_json(q, rels).dump());
    AdhmDatum d = zero_adhm(1, 1);
    d.i.at(0, 0) = 1;
    CHECK(io::complex_to_json(monad_from_adhm(d)).dump() ==
          io::complex_to_json(monad_from_adhm(d)).dump());
}

TEST_CASE("load_json_file reports missing files as input errors") {
    CHECK_THROWS_AS(io::load_json_file("/nonexistent/file.json"), std::invalid_argument);
}
