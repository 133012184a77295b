#include "fsq/acceptance.hpp"

#include <chrono>
#include <functional>
#include <sstream>

#include "fsq/adhm.hpp"
#include "fsq/complex.hpp"
#include "fsq/heart.hpp"
#include "fsq/quiver.hpp"
#include "fsq/sampler.hpp"
#include "fsq/surface.hpp"

namespace fsq {

namespace {

// accumulates one criterion; the first failed expectation is kept as detail
struct Checker {
    bool pass = true;
    std::string detail;
    long checks = 0;

    void expect(bool ok, const std::string& what) {
        ++checks;
        if (!ok && pass) {
            pass = false;
            detail = what;
        }
    }

    std::string summary(const std::string& ok_text) const { return pass ? ok_text : detail; }
};

std::vector<Scalar> class_coords(const NumericalClass& v) {
    std::vector<Scalar> x;
    x.push_back(Scalar(v.rank));
    for (long c : v.c1.coords) x.push_back(Scalar(c));
    x.push_back(Scalar(v.chi));
    return x;
}

// d^v as an integer vector straight from the dictionary matrix (no
// nonnegativity filter, so arbitrary classes are usable as Euler-form input)
DimVector dimvec_by_matrix(SurfaceTag surface, const NumericalClass& v) {
    RationalMatrix m = dimension_vector_matrix(surface);
    std::vector<Scalar> x = class_coords(v);
    DimVector d(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Scalar acc(0);
        for (std::size_t c = 0; c < m.cols(); ++c) acc += m.at(i, c) * x[c];
        d[i] = to_long(acc);
    }
    return d;
}

// the stable sample pool shared by criteria 5, 6, 9 and 11
std::vector<AdhmDatum> stable_pool() {
    std::vector<AdhmDatum> pool;
    SeededSampler sampler(1001);
    for (auto [k, r] : std::vector<std::pair<std::size_t, std::size_t>>{
             {1, 1}, {1, 2}, {2, 1}, {2, 2}, {3, 1}, {3, 2}})
        pool.push_back(random_stable_adhm(sampler, k, r));
    for (std::size_t k = 1; k <= 3; ++k)
        for (auto& d : torus_fixed_points(k)) pool.push_back(std::move(d));
    return pool;
}

void monomials_rec(const std::vector<std::vector<std::size_t>>& groups, std::size_t g,
                   std::size_t idx, const Twist& deg, int remaining, Exponents& cur,
                   std::vector<Exponents>& out) {
    if (g == groups.size()) {
        out.push_back(cur);
        return;
    }
    if (idx == groups[g].size()) {
        if (remaining == 0)
            monomials_rec(groups, g + 1, 0, deg, g + 1 < groups.size() ? deg[g + 1] : 0, cur,
                          out);
        return;
    }
    std::size_t v = groups[g][idx];
    for (int e = 0; e <= remaining; ++e) {
        cur[v] = e;
        monomials_rec(groups, g, idx + 1, deg, remaining - e, cur, out);
    }
    cur[v] = 0;
}

Polynomial random_form(SeededSampler& sampler, Space space, const Twist& deg) {
    const SpaceInfo& info = space_info(space);
    for (int d : deg)
        if (d < 0) return Polynomial(info.nvars);
    std::vector<std::vector<std::size_t>> groups(info.ngroups);
    for (std::size_t v = 0; v < info.nvars; ++v) groups[info.var_group[v]].push_back(v);
    std::vector<Exponents> monos;
    Exponents cur(info.nvars, 0);
    monomials_rec(groups, 0, 0, deg, deg[0], cur, monos);
    Polynomial p(info.nvars);
    for (const Exponents& e : monos) p.add_term(e, Scalar(sampler.next_int(-2, 2)));
    return p;
}

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

// --- the twelve criteria -------------------------------------------------

Checker criterion_dimvec() {
    Checker c;
    for (SurfaceTag surface : {SurfaceTag::P2, SurfaceTag::P1xP1}) {
        auto collection = exceptional_collection(surface);
        SeededSampler sampler(2001);
        for (int trial = 0; trial < 50; ++trial) {
            NumericalClass v = sampler.next_class(surface);
            DimVector by_matrix = dimvec_by_matrix(surface, v);
            for (std::size_t i = 0; i < collection.size(); ++i) {
                long oracle = -to_long(chi_pair(collection[i], to_chern(v)));
                c.expect(by_matrix[i] == oracle,
                         "dictionary mismatch on " + to_string(surface) + " entry " +
                             std::to_string(i));
            }
        }
    }
    return c;
}

Checker criterion_euler_form() {
    Checker c;
    for (SurfaceTag surface : {SurfaceTag::P2, SurfaceTag::P1xP1}) {
        auto [q, rels] = surface == SurfaceTag::P2 ? preset_p2() : preset_p1xp1();
        SeededSampler sampler(2002);
        for (int trial = 0; trial < 50; ++trial) {
            NumericalClass v = sampler.next_class(surface);
            NumericalClass w = sampler.next_class(surface);
            long lhs = euler_form(q, rels, dimvec_by_matrix(surface, v),
                                  dimvec_by_matrix(surface, w));
            long rhs = to_long(chi_pair(to_chern(v), to_chern(w)));
            c.expect(lhs == rhs, "euler form mismatch on " + to_string(surface));
        }
        NumericalClass ideal{surface, 1,
                             divisor(surface, std::vector<long>(
                                                  surface_info(surface).picard_rank, 0)),
                             0};
        DimVector d = dimvec_by_matrix(surface, ideal);
        c.expect(euler_form(q, rels, d, d) == -1,
                 "pinned ideal-sheaf self-pairing != -1 on " + to_string(surface));
        c.expect(to_long(chi_pair(to_chern(ideal), to_chern(ideal))) == -1,
                 "pinned chi_pair != -1 on " + to_string(surface));
    }
    return c;
}

Checker criterion_adhm_monad() {
    Checker c;
    SeededSampler sampler(2003);
    for (int trial = 0; trial < 20; ++trial) {
        std::size_t k = static_cast<std::size_t>(sampler.next_int(1, 3));
        std::size_t r = static_cast<std::size_t>(sampler.next_int(1, 2));
        AdhmDatum d = random_stable_adhm(sampler, k, r);
        c.expect(check_equation(d), "sampled solution violates the equation");
        bool built = true;
        try {
            auto monad = monad_from_adhm(d);  // validates beta*alpha = 0 symbolically
            built = monad.terms[1].size() == 2 * k + r;
        } catch (const std::exception&) {
            built = false;
        }
        c.expect(built, "monad construction failed on a solution");
    }
    int rejected = 0;
    for (int trial = 0; trial < 200 && rejected < 20; ++trial) {
        AdhmDatum d = random_adhm(sampler, static_cast<std::size_t>(sampler.next_int(2, 3)),
                                  static_cast<std::size_t>(sampler.next_int(1, 2)));
        if (check_equation(d)) continue;
        bool threw = false;
        try {
            monad_from_adhm(d);
        } catch (const std::runtime_error&) {
            threw = true;
        }
        c.expect(threw, "monad construction accepted a non-solution");
        ++rejected;
    }
    c.expect(rejected == 20, "could not sample 20 non-solutions");
    return c;
}

Checker criterion_fixed_points() {
    Checker c;
    long expected[] = {1, 2, 3, 5, 7, 11};
    for (std::size_t k = 1; k <= 6; ++k) {
        auto fixed = torus_fixed_points(k);
        c.expect(static_cast<long>(fixed.size()) == expected[k - 1],
                 "fixed point count at k=" + std::to_string(k));
        for (const auto& d : fixed) {
            c.expect(check_equation(d), "fixed datum violates the equation");
            c.expect(is_stable(d), "fixed datum is not stable");
        }
    }
    return c;
}

Checker criterion_framability(const std::vector<AdhmDatum>& pool) {
    Checker c;
    for (const auto& d : pool) {
        auto monad = monad_from_adhm(d);
        auto triv = triviality_on_curve(monad, line_at_infinity());
        c.expect(triv.restricted_degree == 0, "restricted degree != 0");
        c.expect(triv.h0_negative_twist == 0, "h0 of the (-1)-twist != 0");
        c.expect(triv.trivial, "restriction not trivial");
        auto split = splitting_type(restrict_to_curve(monad, line_at_infinity()));
        bool all_zero = true;
        for (int a : split) all_zero = all_zero && a == 0;
        c.expect(all_zero && split.size() == d.r, "splitting type not trivial");
        c.expect(triv.framing.has_value() && inverse(triv.framing->matrix).has_value(),
                 "framing matrix not invertible");
        auto canon = canonical_framing(d);
        c.expect(canon.rank == d.r, "canonical framing rank mismatch");
        for (const auto& proj : canon.projections)
            c.expect(inverse(proj).has_value(), "canonical framing projection singular");
    }
    return c;
}

Checker criterion_battery(const std::vector<AdhmDatum>& pool) {
    Checker c;
    for (const auto& d : pool) {
        auto report = vanishing_battery(monad_from_adhm(d), SurfaceTag::P2);
        c.expect(report.pass, "battery failed on a stable sample (k=" + std::to_string(d.k) +
                                  ", r=" + std::to_string(d.r) + ")");
    }
    auto split = make_complex(Space::P2, 0, {{{-1}, {1}}}, {});
    auto report = vanishing_battery(split, SurfaceTag::P2);
    c.expect(!report.pass, "counterexample O(-1)+O(1) passed the battery");
    bool saw = false;
    for (const auto& entry : report.entries)
        if (entry.label == "O(1)") saw = entry.h0 == 1;
    c.expect(saw, "counterexample h0(E(-1)) != 1");
    return c;
}

Checker criterion_engine() {
    Checker c;
    SeededSampler sampler(2007);
    int trials_per_space[] = {40, 35, 25};
    Space spaces[] = {Space::P1, Space::P2, Space::P1xP1};
    for (int s = 0; s < 3; ++s)
        for (int trial = 0; trial < trials_per_space[s]; ++trial) {
            auto cx = random_two_term(sampler, spaces[s]);
            bool ok = true;
            bool stable = false;
            long euler = 0;
            try {
                auto report = hypercohomology(cx);  // cross-checks the alternating sum
                stable = report.window_stable;
                euler = report.euler;
            } catch (const std::exception&) {
                ok = false;
            }
            c.expect(ok, "chi consistency failed on a random complex");
            c.expect(stable, "window not stable at N vs N+2");
            c.expect(euler == euler_characteristic(cx), "euler mismatch vs closed form");
        }
    for (Space space : spaces)
        for (const Twist& t : box_twists(space, 3)) {
            auto closed = line_bundle_cohomology(space, t);
            auto report = hypercohomology(single_bundle_complex(space, t));
            for (std::size_t n = 0; n < closed.size(); ++n)
                c.expect(report.h_at(static_cast<int>(n)) == closed[n],
                         "closed-form disagreement for a line bundle");
        }
    int done = 0;
    while (done < 20) {
        auto a = random_two_term(sampler, Space::P2);
        auto b = random_two_term(sampler, Space::P2);
        if (a.terms[0].size() * b.terms[0].size() > 2) continue;
        auto cx = tensor_complexes(a, b);
        c.expect(hypercohomology(cx).h == hypercohomology_two_row_p2(cx),
                 "two-row cross-check disagreement");
        ++done;
    }
    return c;
}

Checker criterion_fiber_profile() {
    Checker c;
    SeededSampler sampler(2008);
    for (std::size_t k = 1; k <= 3; ++k) {
        // distinct by construction: x-coordinates m = 0, 1, 2
        std::vector<std::pair<Scalar, Scalar>> points;
        for (std::size_t m = 0; m < k; ++m)
            points.push_back({Scalar(static_cast<long>(m)), sampler.next_scalar()});
        AdhmDatum d = adhm_from_points(points);
        c.expect(is_stable(d), "point configuration datum not stable");
        auto monad = monad_from_adhm(d);
        for (const auto& [x, y] : points)
            c.expect(fiber_homology(monad, {x, y, Scalar(1)}).dim == 2,
                     "fiber dim != 2 at a configured point");
        int others = 0;
        while (others < 20) {
            Scalar x = sampler.next_scalar() + Scalar(7);  // outside the configured x range
            Scalar y = sampler.next_scalar();
            c.expect(fiber_homology(monad, {x, y, Scalar(1)}).dim == 1,
                     "fiber dim != 1 away from the configuration");
            ++others;
        }
    }
    return c;
}

Checker criterion_tangent() {
    Checker c;
    SeededSampler sampler(2009);
    for (auto [k, r] : std::vector<std::pair<std::size_t, std::size_t>>{
             {1, 1}, {2, 1}, {2, 2}, {3, 2}}) {
        AdhmDatum d = random_stable_adhm(sampler, k, r);
        auto t = tangent_report(d);
        c.expect(t.rank_dmu == k * k, "rank of dmu != k^2");
        c.expect(t.stabilizer_dim == 0, "nontrivial stabilizer");
        c.expect(t.tangent_dim == static_cast<long>(2 * k * r), "tangent dim != 2kr");
    }
    return c;
}

Checker criterion_round_trip() {
    Checker c;
    SeededSampler sampler(2010);
    for (int trial = 0; trial < 20; ++trial) {
        std::size_t k = static_cast<std::size_t>(sampler.next_int(0, 3));
        std::size_t r = static_cast<std::size_t>(sampler.next_int(1, 2));
        auto rep = rep_from_monad(monad_from_adhm(random_stable_adhm(sampler, k, r)));
        auto rep2 = rep_from_monad(monad_from_rep(rep));
        bool same = rep2.dims == rep.dims;
        for (std::size_t a = 0; same && a < rep.mats.size(); ++a)
            same = rep2.mats[a] == rep.mats[a];
        c.expect(same, "monad <-> representation round trip not the identity");
    }
    auto [q, rels] = preset_p2();
    int bad_seen = 0;
    for (int trial = 0; trial < 20; ++trial) {
        Representation rep = zero_representation(q, {1, 3, 1});
        for (auto& m : rep.mats) m = sampler.next_matrix(m.rows(), m.cols());
        bool ok = check_relations(q, rels, rep).ok;
        bool built = true;
        try {
            monad_from_rep(rep);  // make_complex validates beta*alpha = 0
        } catch (const std::runtime_error&) {
            built = false;
        }
        c.expect(ok == built, "relations and the complex condition disagree");
        if (!ok) ++bad_seen;
    }
    c.expect(bad_seen > 0, "no relation-violating sample seen");
    return c;
}

Checker criterion_rigidity(const std::vector<AdhmDatum>& pool) {
    Checker c;
    for (const auto& d : pool) {
        auto monad = monad_from_adhm(d);
        Framing id{RationalMatrix::identity(d.r)};
        auto result = framed_hom(monad, id, monad, id);
        c.expect(result.has_solution && result.dim == 0,
                 "framed endomorphisms not unique (k=" + std::to_string(d.k) +
                     ", r=" + std::to_string(d.r) + ")");
    }
    std::size_t samples = 0;
    for (const auto& d : pool) {
        if (samples == 10) break;
        auto monad = monad_from_adhm(d);
        c.expect(restriction_kernel_dim(monad, monad) == 0,
                 "restriction to the framing line not injective");
        ++samples;
    }
    c.expect(samples == 10, "pool too small for the injectivity sweep");
    return c;
}

Checker criterion_hypothesis() {
    Checker c;
    auto p1xp1 = hypothesis_check(
        SurfaceTag::P1xP1, diagonal_curve(),
        {divisor(SurfaceTag::P1xP1, {2, 1}), divisor(SurfaceTag::P1xP1, {2, 0}),
         divisor(SurfaceTag::P1xP1, {1, 1}), divisor(SurfaceTag::P1xP1, {1, 0})});
    c.expect(p1xp1.pass, "P1xP1 collection fails the bounds");
    long expected_pairings[] = {3, 2, 2, 1};
    for (std::size_t i = 0; i < p1xp1.entries.size(); ++i) {
        c.expect(p1xp1.entries[i].pairing == expected_pairings[i], "a+b pairing wrong");
        c.expect(p1xp1.entries[i].upper_bound == 4, "P1xP1 upper bound != 4");
    }
    auto p2 = hypothesis_check(SurfaceTag::P2, line_at_infinity(),
                               {divisor(SurfaceTag::P2, {2}), divisor(SurfaceTag::P2, {1})});
    c.expect(p2.pass, "P2 twists fail the bounds");
    for (const auto& entry : p2.entries) {
        c.expect(entry.pairing > 0 && entry.pairing < 3, "P2 pairing outside (0,3)");
        c.expect(entry.upper_bound == 3, "P2 upper bound != 3");
    }
    return c;
}

}  // namespace

std::vector<AcceptanceResult> run_acceptance() {
    std::vector<AdhmDatum> pool = stable_pool();
    struct Item {
        int id;
        std::string name;
        std::string ok_text;
        std::function<Checker()> run;
    };
    std::vector<Item> items = {
        {1, "dimension-vector dictionary", "100 classes match the HRR oracle",
         [] { return criterion_dimvec(); }},
        {2, "euler-form compatibility", "100 pairs + pinned -1 on both surfaces",
         [] { return criterion_euler_form(); }},
        {3, "linear datum <-> monad", "20 solutions build, 20 non-solutions rejected",
         [] { return criterion_adhm_monad(); }},
        {4, "torus fixed points", "counts 1,2,3,5,7,11 with equation + stability",
         [] { return criterion_fixed_points(); }},
        {5, "framability on the line at infinity", "full stable pool framable",
         [&] { return criterion_framability(pool); }},
        {6, "vanishing battery", "stable pool passes; O(-1)+O(1) fails with h0 = 1",
         [&] { return criterion_battery(pool); }},
        {7, "hypercohomology engine", "chi, window stability, closed forms, two-row checks",
         [] { return criterion_engine(); }},
        {8, "point-configuration fiber profile", "dim 2 at points, 1 elsewhere, k <= 3",
         [] { return criterion_fiber_profile(); }},
        {9, "tangent dimension", "2kr with full-rank moment differential",
         [] { return criterion_tangent(); }},
        {10, "round trip and relations", "20 round trips; relations <-> complex condition",
         [] { return criterion_round_trip(); }},
        {11, "framed rigidity", "unique framed endomorphism; injective restriction",
         [&] { return criterion_rigidity(pool); }},
        {12, "hypothesis bounds", "0 < D.C0 < -K.C0 on both preset collections",
         [] { return criterion_hypothesis(); }},
    };
    std::vector<AcceptanceResult> results;
    for (auto& item : items) {
        auto start = std::chrono::steady_clock::now();
        Checker c;
        try {
            c = item.run();
        } catch (const std::exception& e) {
            c.pass = false;
            c.detail = std::string("exception: ") + e.what();
        }
        double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                             .count();
        std::ostringstream detail;
        detail << c.summary(item.ok_text) << " (" << c.checks << " checks)";
        results.push_back({item.id, item.name, c.pass, detail.str(), seconds});
    }
    return results;
}

}  // namespace fsq
