#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fsq/complex.hpp"
#include "fsq/matrix.hpp"
#include "fsq/sampler.hpp"
#include "fsq/sparse.hpp"

using namespace fsq;

namespace {

Polynomial mono(std::size_t nvars, const Exponents& e, long c = 1) {
    return Polynomial::monomial(nvars, e, Scalar(c));
}

// the monad O(-1) -> O^3 -> O(1) on P2 whose middle homology is the ideal
// sheaf of [0:0:1]: alpha = (-x0,-x1,0)^T, beta = (x1,-x0,x2)
LineBundleComplex ideal_monad_p2() {
    PolyMatrix alpha(3, 1, 3);
    alpha.at(0, 0) = mono(3, {1, 0, 0}, -1);
    alpha.at(1, 0) = mono(3, {0, 1, 0}, -1);
    PolyMatrix beta(1, 3, 3);
    beta.at(0, 0) = mono(3, {0, 1, 0});
    beta.at(0, 1) = mono(3, {1, 0, 0}, -1);
    beta.at(0, 2) = mono(3, {0, 0, 1});
    return make_complex(Space::P2, -1, {{{-1}}, {{0}, {0}, {0}}, {{1}}},
                        {std::move(alpha), std::move(beta)});
}

// Koszul complex O(-2) -> O(-1)^2 -> O of (x0, x1), resolving the
// structure sheaf of [0:0:1] at position 0
LineBundleComplex koszul_point_p2() {
    PolyMatrix d0(2, 1, 3);
    d0.at(0, 0) = mono(3, {0, 1, 0}, -1);
    d0.at(1, 0) = mono(3, {1, 0, 0});
    PolyMatrix d1(1, 2, 3);
    d1.at(0, 0) = mono(3, {1, 0, 0});
    d1.at(0, 1) = mono(3, {0, 1, 0});
    return make_complex(Space::P2, -2, {{{-2}}, {{-1}, {-1}}, {{0}}},
                        {std::move(d0), std::move(d1)});
}

void nonneg_monomials_rec(const SpaceInfo& info,
                          const std::vector<std::vector<std::size_t>>& groups, std::size_t g,
                          std::size_t idx, const Twist& deg, int remaining, Exponents& cur,
                          std::vector<Exponents>& out) {
    if (g == groups.size()) {
        out.push_back(cur);
        return;
    }
    if (idx == groups[g].size()) {
        if (remaining == 0)
            nonneg_monomials_rec(info, groups, g + 1, 0, deg,
                                 g + 1 < groups.size() ? deg[g + 1] : 0, cur, out);
        return;
    }
    std::size_t v = groups[g][idx];
    for (int e = 0; e <= remaining; ++e) {
        cur[v] = e;
        nonneg_monomials_rec(info, groups, g, idx + 1, deg, remaining - e, cur, out);
    }
    cur[v] = 0;
}

std::vector<Exponents> nonneg_monomials(Space space, const Twist& deg) {
    const SpaceInfo& info = space_info(space);
    std::vector<std::vector<std::size_t>> groups(info.ngroups);
    for (std::size_t v = 0; v < info.nvars; ++v) groups[info.var_group[v]].push_back(v);
    for (int d : deg)
        if (d < 0) return {};
    std::vector<Exponents> out;
    Exponents cur(info.nvars, 0);
    nonneg_monomials_rec(info, groups, 0, 0, deg, deg[0], cur, out);
    return out;
}

Polynomial random_form(SeededSampler& sampler, Space space, const Twist& deg) {
    const SpaceInfo& info = space_info(space);
    Polynomial p(info.nvars);
    for (const Exponents& e : nonneg_monomials(space, deg))
        p.add_term(e, Scalar(sampler.next_int(-2, 2)));
    return p;
}

// random two-term complex (no composition constraint to satisfy)
LineBundleComplex random_two_term(SeededSampler& sampler, Space space) {
    const SpaceInfo& info = space_info(space);
    std::size_t nsrc = static_cast<std::size_t>(sampler.next_int(1, 2));
    std::size_t ndst = static_cast<std::size_t>(sampler.next_int(1, 2));
    std::vector<Twist> src, dst;
    for (std::size_t i = 0; i < nsrc; ++i) {
        Twist t(info.ngroups);
        for (auto& x : t) x = static_cast<int>(sampler.next_int(-2, 0));
        src.push_back(std::move(t));
    }
    for (std::size_t i = 0; i < ndst; ++i) {
        Twist t(info.ngroups);
        for (auto& x : t) x = static_cast<int>(sampler.next_int(-1, 1));
        dst.push_back(std::move(t));
    }
    PolyMatrix m(ndst, nsrc, info.nvars);
    for (std::size_t r = 0; r < ndst; ++r)
        for (std::size_t c = 0; c < nsrc; ++c) {
            Twist delta(info.ngroups);
            bool ok = true;
            for (std::size_t g = 0; g < info.ngroups; ++g) {
                delta[g] = dst[r][g] - src[c][g];
                if (delta[g] < 0) ok = false;
            }
            if (ok) m.at(r, c) = random_form(sampler, space, delta);
        }
    return make_complex(space, static_cast<int>(sampler.next_int(-1, 1)), {src, dst}, {m});
}

std::vector<Twist> box_twists(Space space, int bound) {
    const SpaceInfo& info = space_info(space);
    std::vector<Twist> out;
    if (info.ngroups == 1) {
        for (int d = -bound; d <= bound; ++d) out.push_back({d});
    } else {
        for (int a = -bound; a <= bound; ++a)
            for (int b = -bound; b <= bound; ++b) out.push_back({a, b});
    }
    return out;
}

}  // namespace

TEST_CASE("sparse rank matches dense rank") {
    SeededSampler sampler(31);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t rows = static_cast<std::size_t>(sampler.next_int(1, 8));
        std::size_t cols = static_cast<std::size_t>(sampler.next_int(1, 8));
        RationalMatrix dense(rows, cols);
        SparseMatrix sparse(rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c)
                if (sampler.next_int(0, 2) == 0) {
                    Scalar v = sampler.next_scalar();
                    dense.at(r, c) = v;
                    sparse.add(r, c, v);
                }
        CHECK(std::move(sparse).rank() == rank(dense));
    }
}

TEST_CASE("line bundle closed forms: pinned values") {
    CHECK(line_bundle_cohomology(Space::P2, {1}) == std::vector<long>{3, 0, 0});
    CHECK(line_bundle_cohomology(Space::P1xP1, {-1, -1}) == std::vector<long>{0, 0, 0});
    CHECK(line_bundle_cohomology(Space::P1xP1, {1, -2}) == std::vector<long>{0, 2, 0});
    CHECK(line_bundle_cohomology(Space::P1, {-2}) == std::vector<long>{0, 1});
    CHECK(line_bundle_cohomology(Space::P2, {-3}) == std::vector<long>{0, 0, 1});
}

TEST_CASE("Serre duality for the closed forms") {
    for (int d = -6; d <= 3; ++d) {
        auto h = line_bundle_cohomology(Space::P2, {d});
        auto hd = line_bundle_cohomology(Space::P2, {-3 - d});
        for (int i = 0; i <= 2; ++i) CHECK(h[i] == hd[2 - i]);
    }
    for (int a = -4; a <= 2; ++a)
        for (int b = -4; b <= 2; ++b) {
            auto h = line_bundle_cohomology(Space::P1xP1, {a, b});
            auto hd = line_bundle_cohomology(Space::P1xP1, {-2 - a, -2 - b});
            for (int i = 0; i <= 2; ++i) CHECK(h[i] == hd[2 - i]);
        }
}

TEST_CASE("Cech agrees with closed forms for single line bundles") {
    for (Space space : {Space::P1, Space::P2, Space::P1xP1}) {
        for (const Twist& t : box_twists(space, 3)) {
            auto closed = line_bundle_cohomology(space, t);
            auto report = hypercohomology(single_bundle_complex(space, t));
            CHECK(report.window_stable);
            for (std::size_t n = 0; n < closed.size(); ++n)
                CHECK(report.h_at(static_cast<int>(n)) == closed[n]);
            long alt = 0;
            for (const auto& [n, v] : report.h) CHECK(v > 0);
            for (std::size_t n = 0; n < closed.size(); ++n)
                alt += (n % 2 == 0) ? closed[n] : -closed[n];
            CHECK(report.euler == alt);
        }
    }
}

TEST_CASE("shifted single bundle lands in the shifted degree") {
    auto report = hypercohomology(single_bundle_complex(Space::P2, {0}, -2));
    CHECK(report.h == std::map<int, long>{{-2, 1}});
    CHECK(report.euler == 1);
}

TEST_CASE("ideal sheaf monad: all cohomology vanishes") {
    auto monad = ideal_monad_p2();
    auto report = hypercohomology(monad);
    CHECK(report.h.empty());
    CHECK(report.euler == 0);
    CHECK(report.window_stable);

    // twisted by O(1): the two lines through the point
    auto twisted = twist_complex(monad, {1});
    auto rep1 = hypercohomology(twisted);
    CHECK(rep1.h == std::map<int, long>{{0, 2}});
    CHECK(rep1.euler == 2);
}

TEST_CASE("Koszul complex of a point") {
    auto report = hypercohomology(koszul_point_p2());
    CHECK(report.h == std::map<int, long>{{0, 1}});
    CHECK(report.euler == 1);
}

TEST_CASE("window validation") {
    auto monad = ideal_monad_p2();
    int minw = default_window(monad);
    CHECK(minw >= 3);
    CHECK_THROWS_AS(hypercohomology(monad, minw - 1), std::invalid_argument);
    auto report = hypercohomology(monad, minw + 1);
    CHECK(report.h.empty());
    CHECK(report.window_used == minw + 1);
}

TEST_CASE("make_complex validation") {
    // map entry of the wrong degree
    PolyMatrix bad(1, 1, 3);
    bad.at(0, 0) = mono(3, {1, 1, 0});
    CHECK_THROWS_AS(make_complex(Space::P2, 0, {{{0}}, {{1}}}, {bad}),
                    std::invalid_argument);
    // nonzero entry against a negative twist difference
    PolyMatrix down(1, 1, 3);
    down.at(0, 0) = mono(3, {0, 0, 0});
    CHECK_THROWS_AS(make_complex(Space::P2, 0, {{{1}}, {{0}}}, {down}),
                    std::invalid_argument);
    // composition not zero
    PolyMatrix m0(1, 1, 3), m1(1, 1, 3);
    m0.at(0, 0) = mono(3, {1, 0, 0});
    m1.at(0, 0) = mono(3, {0, 1, 0});
    CHECK_THROWS_AS(make_complex(Space::P2, 0, {{{0}}, {{1}}, {{2}}}, {m0, m1}),
                    std::invalid_argument);
}

TEST_CASE("euler consistency on random two-term complexes") {
    SeededSampler sampler(32);
    int trials_per_space[] = {40, 35, 25};
    Space spaces[] = {Space::P1, Space::P2, Space::P1xP1};
    for (int s = 0; s < 3; ++s)
        for (int trial = 0; trial < trials_per_space[s]; ++trial) {
            auto c = random_two_term(sampler, spaces[s]);
            // hypercohomology itself cross-checks the alternating sum
            auto report = hypercohomology(c);
            CHECK(report.window_stable);
            long expected = 0;
            for (std::size_t i = 0; i < c.terms.size(); ++i)
                for (const Twist& t : c.terms[i])
                    expected += ((c.min_position + static_cast<int>(i)) % 2 == 0 ? 1 : -1) *
                                chi_line_bundle(c.space, t);
            CHECK(report.euler == expected);
        }
}

TEST_CASE("tensor with a single bundle equals the twist") {
    auto monad = ideal_monad_p2();
    auto tensored = tensor_complexes(monad, single_bundle_complex(Space::P2, {1}));
    auto direct = twist_complex(monad, {1});
    CHECK(hypercohomology(tensored).h == hypercohomology(direct).h);

    // tensoring in the other order too
    auto tensored2 = tensor_complexes(single_bundle_complex(Space::P2, {1}), monad);
    CHECK(hypercohomology(tensored2).h == hypercohomology(direct).h);
}

TEST_CASE("tensor of two-term complexes is a valid complex") {
    SeededSampler sampler(33);
    for (int trial = 0; trial < 5; ++trial) {
        auto a = random_two_term(sampler, Space::P2);
        auto b = random_two_term(sampler, Space::P2);
        auto c = tensor_complexes(a, b);  // make_complex validates d^2 = 0
        CHECK(c.terms.size() == 3);
        CHECK(hypercohomology(c).window_stable);
    }
}

TEST_CASE("two-row computation agrees with Cech on P2") {
    auto check_agree = [](const LineBundleComplex& c) {
        auto cech = hypercohomology(c).h;
        auto rows = hypercohomology_two_row_p2(c);
        CHECK(cech == rows);
    };
    check_agree(ideal_monad_p2());
    check_agree(twist_complex(ideal_monad_p2(), {1}));
    check_agree(twist_complex(ideal_monad_p2(), {-1}));
    check_agree(koszul_point_p2());
    check_agree(single_bundle_complex(Space::P2, {-4}));

    SeededSampler sampler(34);
    int done = 0;
    while (done < 20) {
        auto a = random_two_term(sampler, Space::P2);
        auto b = random_two_term(sampler, Space::P2);
        if (a.terms[0].size() * b.terms[0].size() > 2) continue;  // keep windows small
        auto c = tensor_complexes(a, b);
        check_agree(c);
        ++done;
    }
}

TEST_CASE("restriction of the ideal sheaf monad to the line at infinity") {
    auto restricted = restrict_to_curve(ideal_monad_p2(), line_at_infinity());
    CHECK(restricted.space == Space::P1);
    CHECK(restricted.min_position == -1);
    CHECK(restricted.terms == std::vector<std::vector<Twist>>{{{-1}}, {{0}, {0}, {0}}, {{1}}});
    // alpha becomes (-s,-t,0)^T, beta becomes (t,-s,0)
    CHECK(restricted.maps[0].at(0, 0) == mono(2, {1, 0}, -1));
    CHECK(restricted.maps[0].at(1, 0) == mono(2, {0, 1}, -1));
    CHECK(restricted.maps[0].at(2, 0).is_zero());
    CHECK(restricted.maps[1].at(0, 0) == mono(2, {0, 1}));
    CHECK(restricted.maps[1].at(0, 1) == mono(2, {1, 0}, -1));
    CHECK(restricted.maps[1].at(0, 2).is_zero());
}

TEST_CASE("restriction to the diagonal adds the bidegrees") {
    for (int a = -2; a <= 2; ++a)
        for (int b = -2; b <= 2; ++b) {
            auto c = single_bundle_complex(Space::P1xP1, {a, b});
            auto r = restrict_to_curve(c, diagonal_curve());
            CHECK(r.terms[0][0] == Twist{a + b});
        }
}

TEST_CASE("fiber homology of the ideal sheaf monad") {
    auto monad = ideal_monad_p2();
    // dimension jumps to 2 exactly at the point [0:0:1]
    CHECK(fiber_homology_dim(monad, {Scalar(0), Scalar(0), Scalar(1)}) == 2);
    CHECK(fiber_homology_dim(monad, {Scalar(1), Scalar(0), Scalar(0)}) == 1);
    CHECK(fiber_homology_dim(monad, {Scalar(1), Scalar(2), Scalar(3)}) == 1);
    CHECK_THROWS_AS(fiber_homology_dim(monad, {Scalar(0), Scalar(0), Scalar(0)}),
                    std::invalid_argument);
    CHECK_THROWS_AS(fiber_homology_dim(monad, {Scalar(1), Scalar(0)}), std::invalid_argument);
}

TEST_CASE("splitting types") {
    // the restricted ideal sheaf monad is trivial of rank 1
    auto restricted = restrict_to_curve(ideal_monad_p2(), line_at_infinity());
    CHECK(splitting_type(restricted) == std::vector<int>{0});

    CHECK(splitting_type(single_bundle_complex(Space::P1, {2})) == std::vector<int>{2});

    auto sum = make_complex(Space::P1, 0, {{{1}, {-1}}}, {});
    CHECK(splitting_type(sum) == std::vector<int>{1, -1});

    auto sum3 = make_complex(Space::P1, 0, {{{1}, {0}, {0}}}, {});
    CHECK(splitting_type(sum3) == std::vector<int>{1, 0, 0});

    // O(-1) -s-> O has torsion homology at the zero of s
    PolyMatrix m(1, 1, 2);
    m.at(0, 0) = mono(2, {1, 0});
    auto torsion = make_complex(Space::P1, -1, {{{-1}}, {{0}}}, {m});
    CHECK_THROWS(splitting_type(torsion));
}

TEST_CASE("splitting type of random direct sums") {
    SeededSampler sampler(35);
    for (int trial = 0; trial < 15; ++trial) {
        std::size_t n = static_cast<std::size_t>(sampler.next_int(1, 3));
        std::vector<Twist> twists;
        std::vector<int> expected;
        for (std::size_t i = 0; i < n; ++i) {
            int d = static_cast<int>(sampler.next_int(-3, 3));
            twists.push_back({d});
            expected.push_back(d);
        }
        std::sort(expected.rbegin(), expected.rend());
        auto c = make_complex(Space::P1, 0, {twists}, {});
        CHECK(splitting_type(c) == expected);
    }
}
