#include "fsq/heart.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace fsq {

LineBundleComplex omega_resolution_p2() {
    PolyMatrix eval(1, 3, 3);
    eval.at(0, 0) = Polynomial::variable(3, 0);
    eval.at(0, 1) = Polynomial::variable(3, 1);
    eval.at(0, 2) = Polynomial::variable(3, 2);
    return make_complex(Space::P2, 0, {{{-1}, {-1}, {-1}}, {{0}}}, {std::move(eval)});
}

VanishingReport vanishing_battery(const LineBundleComplex& c, SurfaceTag surface) {
    if (space_of_surface(surface) != c.space)
        throw std::invalid_argument("complex lives on a different surface");
    auto collection = exceptional_collection(surface);
    auto labels = exceptional_collection_labels(surface);

    VanishingReport report;
    report.pass = true;
    for (std::size_t m = 0; m < collection.size(); ++m) {
        CohomologyReport coh;
        if (labels[m] == "tau") {
            coh = hypercohomology(tensor_complexes(c, omega_resolution_p2()));
        } else {
            Twist t;
            for (long x : collection[m].c1.coords) t.push_back(static_cast<int>(-x));
            coh = hypercohomology(twist_complex(c, t));
        }
        BatteryEntry entry{labels[m], coh.h_at(0), coh.h_at(2)};
        if (entry.h0 != 0 || entry.h2 != 0) report.pass = false;
        report.entries.push_back(std::move(entry));
    }
    return report;
}

namespace {

std::vector<Exponents> p1_h0_monomials(int d) {
    std::vector<Exponents> out;
    for (int a = 0; a <= d; ++a) out.push_back({a, d - a});
    return out;
}

struct H0Basis {
    std::vector<std::vector<Exponents>> per_term;
    std::vector<std::size_t> offsets;  // per_term.size() + 1
    std::size_t dim = 0;
};

H0Basis h0_basis(const std::vector<Twist>& twists) {
    H0Basis b;
    b.offsets.push_back(0);
    for (const Twist& t : twists) {
        b.per_term.push_back(p1_h0_monomials(t[0]));
        b.dim += b.per_term.back().size();
        b.offsets.push_back(b.dim);
    }
    return b;
}

RationalMatrix h0_map(const PolyMatrix& pm, const H0Basis& src, const H0Basis& dst) {
    RationalMatrix m(dst.dim, src.dim);
    for (std::size_t t = 0; t < src.per_term.size(); ++t)
        for (std::size_t j = 0; j < src.per_term[t].size(); ++j) {
            std::size_t col = src.offsets[t] + j;
            const Exponents& e = src.per_term[t][j];
            for (std::size_t r = 0; r < pm.rows; ++r)
                for (const auto& [delta, coeff] : pm.at(r, t).terms()) {
                    Exponents e2{e[0] + delta[0], e[1] + delta[1]};
                    const auto& tb = dst.per_term[r];
                    auto it = std::lower_bound(tb.begin(), tb.end(), e2);
                    if (it == tb.end() || *it != e2)
                        throw std::logic_error("missing section monomial");
                    m.at(dst.offsets[r] + static_cast<std::size_t>(it - tb.begin()), col) +=
                        coeff;
                }
        }
    return m;
}

// fiber ranks at enough sample points of P1; throws on a jump
long constant_fiber_rank(const LineBundleComplex& c) {
    int npoints = default_window(c) + 3;
    long r = -1;
    for (int k = 0; k <= npoints; ++k) {
        std::vector<Scalar> pt = k == npoints ? std::vector<Scalar>{Scalar(0), Scalar(1)}
                                              : std::vector<Scalar>{Scalar(1), Scalar(k)};
        long d = fiber_homology_dim(c, pt);
        if (r < 0) r = d;
        if (d != r)
            throw std::runtime_error("restricted homology is not locally free");
    }
    return r;
}

}  // namespace

TrivialityResult triviality_on_curve(const LineBundleComplex& c, const CurveModel& c0) {
    LineBundleComplex restricted = restrict_to_curve(c, c0);
    TrivialityResult result;
    result.rank = constant_fiber_rank(restricted);
    result.restricted_degree = euler_characteristic(restricted) - result.rank;
    result.h0_negative_twist = hypercohomology(twist_complex(restricted, {-1})).h_at(0);
    result.trivial = result.restricted_degree == 0 && result.h0_negative_twist == 0;
    if (!result.trivial) return result;

    // sections of the restriction as kernel-mod-image on the section level;
    // valid because the terms left of position 0 have no middle cohomology
    std::size_t idx0 = static_cast<std::size_t>(-restricted.min_position);
    for (std::size_t i = 0; i < idx0; ++i)
        for (const Twist& t : restricted.terms[i])
            if (t[0] <= -2)
                throw std::runtime_error(
                    "cannot certify a section basis: a term left of position 0 has sections "
                    "hidden in higher cohomology");

    H0Basis b0 = h0_basis(restricted.terms[idx0]);
    std::size_t dim0 = restricted.terms[idx0].size();
    RationalMatrix out =
        idx0 < restricted.maps.size()
            ? h0_map(restricted.maps[idx0], b0, h0_basis(restricted.terms[idx0 + 1]))
            : RationalMatrix(0, b0.dim);
    RationalMatrix in =
        idx0 > 0 ? h0_map(restricted.maps[idx0 - 1], h0_basis(restricted.terms[idx0 - 1]), b0)
                 : RationalMatrix(b0.dim, 0);

    Subspace image;
    for (std::size_t col = 0; col < in.cols(); ++col) {
        std::vector<Scalar> v(in.rows());
        for (std::size_t r = 0; r < in.rows(); ++r) v[r] = in.at(r, col);
        image = sum_subspaces(image, {v}, b0.dim);
    }
    Subspace span = image;
    std::vector<std::vector<Scalar>> sections;
    for (const auto& v : kernel_basis(out)) {
        Subspace bigger = sum_subspaces(span, {v}, b0.dim);
        if (bigger.size() > span.size()) {
            span = std::move(bigger);
            sections.push_back(v);
        }
    }
    if (static_cast<long>(sections.size()) != result.rank)
        throw std::logic_error("section count does not match the rank");

    // express the sections against the canonical fiber basis at [1:0]
    std::vector<Scalar> p0{Scalar(1), Scalar(0)};
    FiberHomology fh = fiber_homology(restricted, p0);
    RationalMatrix alpha0 =
        idx0 > 0 ? [&] {
            const PolyMatrix& pm = restricted.maps[idx0 - 1];
            RationalMatrix m(pm.rows, pm.cols);
            for (std::size_t r = 0; r < pm.rows; ++r)
                for (std::size_t cc = 0; cc < pm.cols; ++cc)
                    m.at(r, cc) = pm.at(r, cc).evaluate(p0);
            return m;
        }()
                 : RationalMatrix(dim0, 0);

    std::size_t ncoords = fh.basis.size() + alpha0.cols();
    RationalMatrix system(dim0, ncoords);
    for (std::size_t b = 0; b < fh.basis.size(); ++b)
        for (std::size_t r = 0; r < dim0; ++r) system.at(r, b) = fh.basis[b][r];
    for (std::size_t cc = 0; cc < alpha0.cols(); ++cc)
        for (std::size_t r = 0; r < dim0; ++r)
            system.at(r, fh.basis.size() + cc) = alpha0.at(r, cc);

    RationalMatrix framing(sections.size(), sections.size());
    for (std::size_t s = 0; s < sections.size(); ++s) {
        // evaluate the section at p0, one fiber coordinate per term
        std::vector<Scalar> value(dim0, Scalar(0));
        for (std::size_t t = 0; t < dim0; ++t)
            for (std::size_t j = 0; j < b0.per_term[t].size(); ++j) {
                const Exponents& e = b0.per_term[t][j];
                if (e[1] == 0) value[t] += sections[s][b0.offsets[t] + j];
            }
        auto coords = solve(system, value);
        if (!coords) throw std::logic_error("section does not evaluate into the fiber");
        for (std::size_t b = 0; b < sections.size(); ++b) framing.at(s, b) = (*coords)[b];
    }
    if (!inverse(framing)) throw std::logic_error("computed framing is singular");
    result.framing = Framing{std::move(framing)};
    return result;
}

namespace {

struct NormalForm {
    std::size_t d0, d1, d2;
};

NormalForm normal_form_dims(const LineBundleComplex& monad) {
    if (monad.space != Space::P2 || monad.min_position != -1 || monad.terms.size() != 3)
        throw std::invalid_argument("monad is not in the normal form O(-1)^a -> O^b -> O(1)^c");
    int expected[] = {-1, 0, 1};
    for (std::size_t i = 0; i < 3; ++i)
        for (const Twist& t : monad.terms[i])
            if (t[0] != expected[i])
                throw std::invalid_argument(
                    "monad is not in the normal form O(-1)^a -> O^b -> O(1)^c");
    return {monad.terms[0].size(), monad.terms[1].size(), monad.terms[2].size()};
}

RationalMatrix coefficient_matrix(const PolyMatrix& pm, std::size_t var) {
    RationalMatrix m(pm.rows, pm.cols);
    Exponents unit(3, 0);
    unit[var] = 1;
    for (std::size_t r = 0; r < pm.rows; ++r)
        for (std::size_t c = 0; c < pm.cols; ++c) {
            auto it = pm.at(r, c).terms().find(unit);
            if (it != pm.at(r, c).terms().end()) m.at(r, c) = it->second;
        }
    return m;
}

}  // namespace

Representation rep_from_monad(const LineBundleComplex& monad) {
    NormalForm nf = normal_form_dims(monad);
    auto [q, rels] = preset_p2();
    Representation rep = zero_representation(
        q, {static_cast<long>(nf.d0), static_cast<long>(nf.d1), static_cast<long>(nf.d2)});
    for (std::size_t m = 0; m < 3; ++m) {
        rep.mats[m] = coefficient_matrix(monad.maps[0], m);
        rep.mats[3 + m] = coefficient_matrix(monad.maps[1], m);
    }
    return rep;
}

LineBundleComplex monad_from_rep(const Representation& rep) {
    if (rep.dims.size() != 3) throw std::invalid_argument("representation needs three vertices");
    auto [q, rels] = preset_p2();
    if (!check_relations(q, rels, rep).ok)
        throw std::runtime_error("relations fail: the assembled maps do not compose to zero");

    std::size_t d0 = static_cast<std::size_t>(rep.dims[0]);
    std::size_t d1 = static_cast<std::size_t>(rep.dims[1]);
    std::size_t d2 = static_cast<std::size_t>(rep.dims[2]);
    PolyMatrix alpha(d1, d0, 3), beta(d2, d1, 3);
    for (std::size_t m = 0; m < 3; ++m) {
        Polynomial xm = Polynomial::variable(3, m);
        for (std::size_t r = 0; r < d1; ++r)
            for (std::size_t c = 0; c < d0; ++c)
                alpha.at(r, c) = alpha.at(r, c) + xm.scaled(rep.mats[m].at(r, c));
        for (std::size_t r = 0; r < d2; ++r)
            for (std::size_t c = 0; c < d1; ++c)
                beta.at(r, c) = beta.at(r, c) + xm.scaled(rep.mats[3 + m].at(r, c));
    }
    return make_complex(Space::P2, -1,
                        {std::vector<Twist>(d0, Twist{-1}), std::vector<Twist>(d1, Twist{0}),
                         std::vector<Twist>(d2, Twist{1})},
                        {std::move(alpha), std::move(beta)});
}

namespace {

struct ChainMapSystem {
    NormalForm e, f;
    std::size_t r = 0;
    std::size_t nvars = 0;
    RationalMatrix homog;  // chain-map equations
    std::size_t w_index(std::size_t a, std::size_t b) const {
        // position of the W-block entry (a,b) of f_0 among the unknowns
        return f.d0 * e.d0 + (2 * f.d0 + a) * e.d1 + (2 * e.d0 + b);
    }
};

ChainMapSystem chain_map_system(const LineBundleComplex& monad_e,
                                const LineBundleComplex& monad_f) {
    ChainMapSystem sys;
    sys.e = normal_form_dims(monad_e);
    sys.f = normal_form_dims(monad_f);
    const NormalForm& e = sys.e;
    const NormalForm& f = sys.f;
    if (e.d0 != e.d2 || f.d0 != f.d2)
        throw std::invalid_argument("framed monads need matching end terms (V, V, W middle)");
    if (e.d1 < 2 * e.d0 + 1 || f.d1 < 2 * f.d0 + 1)
        throw std::invalid_argument("monad has no W block");
    std::size_t re = e.d1 - 2 * e.d0;
    std::size_t rf = f.d1 - 2 * f.d0;
    if (re != rf) throw std::invalid_argument("framing dimension mismatch");
    sys.r = re;

    // unknowns: f_{-1} (d0f x d0e), f_0 (d1f x d1e), f_1 (d2f x d2e)
    std::size_t n1 = f.d0 * e.d0, n2 = f.d1 * e.d1;
    sys.nvars = n1 + n2 + f.d2 * e.d2;
    auto idx_m1 = [&](std::size_t a, std::size_t b) { return a * e.d0 + b; };
    auto idx_0 = [&](std::size_t a, std::size_t b) { return n1 + a * e.d1 + b; };
    auto idx_1 = [&](std::size_t a, std::size_t b) { return n1 + n2 + a * e.d2 + b; };

    std::size_t neq = 3 * (f.d1 * e.d0 + f.d2 * e.d1);
    sys.homog = RationalMatrix(neq, sys.nvars);
    RationalMatrix& homog = sys.homog;
    std::size_t row = 0;
    for (std::size_t v = 0; v < 3; ++v) {
        RationalMatrix ae = coefficient_matrix(monad_e.maps[0], v);
        RationalMatrix af = coefficient_matrix(monad_f.maps[0], v);
        for (std::size_t a = 0; a < f.d1; ++a)
            for (std::size_t b = 0; b < e.d0; ++b) {
                // (f_0 alpha_E - alpha_F f_{-1})[a][b] coefficient of x_v
                for (std::size_t k = 0; k < e.d1; ++k)
                    homog.at(row, idx_0(a, k)) += ae.at(k, b);
                for (std::size_t k = 0; k < f.d0; ++k)
                    homog.at(row, idx_m1(k, b)) -= af.at(a, k);
                ++row;
            }
        RationalMatrix be = coefficient_matrix(monad_e.maps[1], v);
        RationalMatrix bf = coefficient_matrix(monad_f.maps[1], v);
        for (std::size_t a = 0; a < f.d2; ++a)
            for (std::size_t b = 0; b < e.d1; ++b) {
                // (f_1 beta_E - beta_F f_0)[a][b] coefficient of x_v
                for (std::size_t k = 0; k < e.d2; ++k)
                    homog.at(row, idx_1(a, k)) += be.at(k, b);
                for (std::size_t k = 0; k < f.d1; ++k)
                    homog.at(row, idx_0(k, b)) -= bf.at(a, k);
                ++row;
            }
    }
    return sys;
}

// appends the r*r rows selecting the W-block of f_0
RationalMatrix with_w_rows(const ChainMapSystem& sys) {
    std::size_t neq = sys.homog.rows();
    RationalMatrix full(neq + sys.r * sys.r, sys.nvars);
    for (std::size_t a = 0; a < neq; ++a)
        for (std::size_t b = 0; b < sys.nvars; ++b) full.at(a, b) = sys.homog.at(a, b);
    std::size_t extra = neq;
    for (std::size_t a = 0; a < sys.r; ++a)
        for (std::size_t b = 0; b < sys.r; ++b) full.at(extra++, sys.w_index(a, b)) = 1;
    return full;
}

}  // namespace

FramedHomResult framed_hom(const LineBundleComplex& monad_e, const Framing& phi_e,
                           const LineBundleComplex& monad_f, const Framing& phi_f) {
    ChainMapSystem sys = chain_map_system(monad_e, monad_f);
    std::size_t r = sys.r;
    if (phi_e.matrix.rows() != r || phi_e.matrix.cols() != r || phi_f.matrix.rows() != r ||
        phi_f.matrix.cols() != r)
        throw std::invalid_argument("framing dimension mismatch");
    auto phi_f_inv = inverse(phi_f.matrix);
    if (!phi_f_inv || !inverse(phi_e.matrix))
        throw std::invalid_argument("framings must be invertible");
    RationalMatrix target = *phi_f_inv * phi_e.matrix;

    FramedHomResult result;
    result.unframed_dim = sys.nvars - rank(sys.homog);

    // framed condition: the W-block of f_0 equals phi_F^{-1} phi_E
    RationalMatrix full = with_w_rows(sys);
    std::vector<Scalar> rhs(full.rows(), Scalar(0));
    std::size_t extra = sys.homog.rows();
    for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = 0; b < r; ++b) rhs[extra++] = target.at(a, b);
    auto sol = solve(full, rhs);
    result.has_solution = sol.has_value();
    result.dim = result.has_solution ? sys.nvars - rank(full) : 0;
    return result;
}

std::size_t restriction_kernel_dim(const LineBundleComplex& monad_e,
                                   const LineBundleComplex& monad_f) {
    ChainMapSystem sys = chain_map_system(monad_e, monad_f);
    return sys.nvars - rank(with_w_rows(sys));
}

HilbertDemoReport hilbert_demo(const std::vector<std::pair<Scalar, Scalar>>& points,
                               std::uint64_t seed) {
    HilbertDemoReport report;
    AdhmDatum d = adhm_from_points(points);
    report.k = d.k;
    report.equation_ok = check_equation(d);
    report.stable = is_stable(d);
    if (!report.equation_ok || !report.stable) return report;

    LineBundleComplex monad = monad_from_adhm(d);

    report.fiber_profile_ok = true;
    for (const auto& [x, y] : points) {
        long mult = 0;
        for (const auto& [u, v] : points)
            if (u == x && v == y) ++mult;
        if (fiber_homology(monad, {x, y, Scalar(1)}).dim != 1 + mult)
            report.fiber_profile_ok = false;
    }
    SeededSampler sampler(seed);
    for (int trial = 0; trial < 20; ++trial) {
        Scalar x = sampler.next_scalar() + Scalar(sampler.next_int(6, 9));
        Scalar y = sampler.next_scalar();
        bool configured = false;
        for (const auto& [u, v] : points)
            if (u == x && v == y) configured = true;
        if (configured) continue;
        if (fiber_homology(monad, {x, y, Scalar(1)}).dim != 1) report.fiber_profile_ok = false;
    }

    auto triviality = triviality_on_curve(monad, line_at_infinity());
    report.triviality_ok = triviality.trivial && triviality.framing.has_value();

    report.battery_pass = vanishing_battery(monad, SurfaceTag::P2).pass;

    Representation rep = rep_from_monad(monad);
    auto [q, rels] = preset_p2();
    report.relations_ok = check_relations(q, rels, rep).ok;
    if (report.relations_ok) {
        LineBundleComplex rebuilt = monad_from_rep(rep);
        report.roundtrip_ok = rebuilt.terms == monad.terms &&
                              rebuilt.maps.size() == monad.maps.size();
        for (std::size_t i = 0; report.roundtrip_ok && i < monad.maps.size(); ++i)
            report.roundtrip_ok = rebuilt.maps[i].entries == monad.maps[i].entries;
    }

    report.pass = report.fiber_profile_ok && report.triviality_ok && report.battery_pass &&
                  report.relations_ok && report.roundtrip_ok;
    return report;
}

}  // namespace fsq
