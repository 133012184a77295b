#include "fsq/surface.hpp"

#include <stdexcept>

namespace fsq {

std::string to_string(SurfaceTag tag) { return tag == SurfaceTag::P2 ? "P2" : "P1xP1"; }

SurfaceTag surface_from_string(const std::string& s) {
    if (s == "P2") return SurfaceTag::P2;
    if (s == "P1xP1") return SurfaceTag::P1xP1;
    throw std::invalid_argument("unknown surface \"" + s + "\"");
}

const SurfaceKind& surface_info(SurfaceTag tag) {
    static const SurfaceKind p2{SurfaceTag::P2, 1, {{1}}, {-3}, 3};
    static const SurfaceKind p1xp1{SurfaceTag::P1xP1, 2, {{0, 1}, {1, 0}}, {-2, -2}, 4};
    return tag == SurfaceTag::P2 ? p2 : p1xp1;
}

DivisorClass divisor(SurfaceTag surface, std::vector<long> coords) {
    if (static_cast<int>(coords.size()) != surface_info(surface).picard_rank)
        throw std::invalid_argument("divisor coordinate count mismatch");
    return DivisorClass{surface, std::move(coords)};
}

DivisorClass canonical_divisor(SurfaceTag surface) {
    return DivisorClass{surface, surface_info(surface).canonical_class};
}

long intersect(const DivisorClass& d, const DivisorClass& e) {
    if (d.surface != e.surface) throw std::invalid_argument("surface mismatch");
    const auto& q = surface_info(d.surface).intersection_matrix;
    long total = 0;
    for (std::size_t a = 0; a < d.coords.size(); ++a)
        for (std::size_t b = 0; b < e.coords.size(); ++b) total += d.coords[a] * q[a][b] * e.coords[b];
    return total;
}

ChernCharacter chern_of_line_bundle(const DivisorClass& d) {
    // ch2(O(D)) = D^2 / 2
    return ChernCharacter{d.surface, Scalar(1), d, Scalar(intersect(d, d)) / 2};
}

ChernCharacter chern_of_structure_sheaf(SurfaceTag surface) {
    return ChernCharacter{surface, Scalar(1),
                          DivisorClass{surface, std::vector<long>(surface_info(surface).picard_rank, 0)},
                          Scalar(0)};
}

ChernCharacter chern_dual(const ChernCharacter& v) {
    ChernCharacter out = v;
    for (auto& c : out.c1.coords) c = -c;
    return out;
}

ChernCharacter chern_product(const ChernCharacter& v, const ChernCharacter& w) {
    if (v.surface != w.surface) throw std::invalid_argument("surface mismatch");
    ChernCharacter out{v.surface, v.rank * w.rank, DivisorClass{v.surface, {}}, Scalar(0)};
    out.c1.coords.resize(v.c1.coords.size());
    // c1 components stay integral only when both ranks are integers; the
    // sampler never produces anything else, so keep them as longs via Scalar math.
    std::vector<Scalar> c1(v.c1.coords.size());
    for (std::size_t i = 0; i < c1.size(); ++i)
        c1[i] = v.rank * Scalar(w.c1.coords[i]) + w.rank * Scalar(v.c1.coords[i]);
    for (std::size_t i = 0; i < c1.size(); ++i) out.c1.coords[i] = to_long(c1[i]);
    out.ch2 = v.rank * w.ch2 + Scalar(intersect(v.c1, w.c1)) + v.ch2 * w.rank;
    return out;
}

ChernCharacter chern_sum(const ChernCharacter& v, const ChernCharacter& w) {
    if (v.surface != w.surface) throw std::invalid_argument("surface mismatch");
    ChernCharacter out = v;
    out.rank += w.rank;
    for (std::size_t i = 0; i < out.c1.coords.size(); ++i) out.c1.coords[i] += w.c1.coords[i];
    out.ch2 += w.ch2;
    return out;
}

namespace {

// c1 . td1(X):  (3/2) c1.H on P2, c1.(H+F) on P1xP1.
Scalar td1_pairing(const DivisorClass& c1) {
    if (c1.surface == SurfaceTag::P2) return Scalar(3 * c1.coords[0]) / 2;
    return Scalar(c1.coords[0] + c1.coords[1]);
}

}  // namespace

Scalar chi(const ChernCharacter& ch) { return ch.ch2 + td1_pairing(ch.c1) + ch.rank; }

Scalar chi_pair(const ChernCharacter& v, const ChernCharacter& w) {
    return chi(chern_product(chern_dual(v), w));
}

ChernCharacter to_chern(const NumericalClass& v) {
    ChernCharacter ch{v.surface, Scalar(v.rank), v.c1, Scalar(0)};
    ch.ch2 = Scalar(v.chi) - td1_pairing(v.c1) - Scalar(v.rank);
    return ch;
}

NumericalClass to_numerical(const ChernCharacter& ch) {
    return NumericalClass{ch.surface, to_long(ch.rank), ch.c1, to_long(chi(ch))};
}

NumericalClass twist(const NumericalClass& v, const DivisorClass& d) {
    if (v.surface != d.surface) throw std::invalid_argument("surface mismatch");
    return to_numerical(chern_product(to_chern(v), chern_of_line_bundle(d)));
}

std::vector<ChernCharacter> exceptional_collection(SurfaceTag surface) {
    if (surface == SurfaceTag::P2) {
        // ch of the tangent bundle from the Euler sequence: (2, 3H, 3/2).
        ChernCharacter tangent{SurfaceTag::P2, Scalar(2), divisor(SurfaceTag::P2, {3}), Scalar(3) / 2};
        return {chern_of_line_bundle(divisor(SurfaceTag::P2, {2})), tangent,
                chern_of_line_bundle(divisor(SurfaceTag::P2, {1}))};
    }
    return {chern_of_line_bundle(divisor(SurfaceTag::P1xP1, {2, 1})),
            chern_of_line_bundle(divisor(SurfaceTag::P1xP1, {2, 0})),
            chern_of_line_bundle(divisor(SurfaceTag::P1xP1, {1, 1})),
            chern_of_line_bundle(divisor(SurfaceTag::P1xP1, {1, 0}))};
}

std::vector<std::string> exceptional_collection_labels(SurfaceTag surface) {
    if (surface == SurfaceTag::P2) return {"O(2)", "tau", "O(1)"};
    return {"O(2,1)", "O(2,0)", "O(1,1)", "O(1,0)"};
}

CurveModel make_curve(DivisorClass cls, std::vector<Polynomial> parametrization) {
    const auto& info = surface_info(cls.surface);
    std::size_t nvars = cls.surface == SurfaceTag::P2 ? 3 : 4;
    if (parametrization.size() != nvars)
        throw std::invalid_argument("parametrization component count mismatch");
    // Group g spans ambient coordinates [start, start+size); each component
    // must be homogeneous in (s,t) of degree (basis divisor of g) . cls.
    for (int g = 0; g < info.picard_rank; ++g) {
        std::vector<long> basis(info.picard_rank, 0);
        basis[g] = 1;
        long expected = intersect(DivisorClass{cls.surface, basis}, cls);
        std::size_t start = (cls.surface == SurfaceTag::P2) ? 0 : 2 * g;
        std::size_t size = (cls.surface == SurfaceTag::P2) ? 3 : 2;
        for (std::size_t i = start; i < start + size; ++i) {
            const auto& p = parametrization[i];
            if (p.nvars() != 2) throw std::invalid_argument("parametrization must live in (s,t)");
            if (p.is_zero()) continue;
            if (p.homogeneous_degree({0, 1}) != expected)
                throw std::invalid_argument("parametrization degree does not match the curve class");
        }
    }
    return CurveModel{std::move(cls), std::move(parametrization)};
}

CurveModel line_at_infinity() {
    auto s = Polynomial::variable(2, 0);
    auto t = Polynomial::variable(2, 1);
    return make_curve(divisor(SurfaceTag::P2, {1}), {s, t, Polynomial(2)});
}

CurveModel diagonal_curve() {
    auto s = Polynomial::variable(2, 0);
    auto t = Polynomial::variable(2, 1);
    return make_curve(divisor(SurfaceTag::P1xP1, {1, 1}), {s, t, s, t});
}

HypothesisReport hypothesis_check(SurfaceTag surface, const CurveModel& c0,
                                  const std::vector<DivisorClass>& collection) {
    HypothesisReport report;
    long upper = -intersect(canonical_divisor(surface), c0.cls);
    bool all_ok = true;
    for (const auto& d : collection) {
        long pairing = intersect(d, c0.cls);
        HypothesisEntry entry{d, pairing, upper, pairing > 0, pairing < upper};
        all_ok = all_ok && entry.lower_ok && entry.upper_ok;
        report.entries.push_back(std::move(entry));
    }
    // Degree-one class search in the box [-3,3]^rank.
    const auto& info = surface_info(surface);
    std::vector<long> coords(info.picard_rank, -3);
    while (true) {
        DivisorClass cand{surface, coords};
        if (intersect(cand, c0.cls) == 1) {
            report.degree_one_class = cand;
            break;
        }
        int pos = 0;
        while (pos < info.picard_rank && coords[pos] == 3) coords[pos++] = -3;
        if (pos == info.picard_rank) break;
        ++coords[pos];
    }
    report.pass = all_ok && report.degree_one_class.has_value();
    return report;
}

}  // namespace fsq
