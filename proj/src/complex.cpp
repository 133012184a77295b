#include "fsq/complex.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "fsq/matrix.hpp"
#include "fsq/sparse.hpp"

namespace fsq {

std::string to_string(Space space) {
    switch (space) {
        case Space::P1: return "P1";
        case Space::P2: return "P2";
        case Space::P1xP1: return "P1xP1";
    }
    throw std::logic_error("bad space tag");
}

Space space_from_string(const std::string& s) {
    if (s == "P1") return Space::P1;
    if (s == "P2") return Space::P2;
    if (s == "P1xP1") return Space::P1xP1;
    throw std::invalid_argument("unknown space: " + s);
}

Space space_of_surface(SurfaceTag tag) {
    return tag == SurfaceTag::P2 ? Space::P2 : Space::P1xP1;
}

const SpaceInfo& space_info(Space space) {
    static const SpaceInfo p1{2, 1, {0, 0}, {{0}, {1}}, {"s", "t"}};
    static const SpaceInfo p2{3, 1, {0, 0, 0}, {{0}, {1}, {2}}, {"x0", "x1", "x2"}};
    static const SpaceInfo p1xp1{4, 2, {0, 0, 1, 1}, {{0, 2}, {0, 3}, {1, 2}, {1, 3}},
                                 {"x0", "x1", "y0", "y1"}};
    switch (space) {
        case Space::P1: return p1;
        case Space::P2: return p2;
        case Space::P1xP1: return p1xp1;
    }
    throw std::logic_error("bad space tag");
}

namespace {

std::vector<std::vector<std::size_t>> group_vars(const SpaceInfo& info) {
    std::vector<std::vector<std::size_t>> g(info.ngroups);
    for (std::size_t v = 0; v < info.nvars; ++v) g[info.var_group[v]].push_back(v);
    return g;
}

}  // namespace

PolyMatrix poly_matmul(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.cols != b.rows) throw std::invalid_argument("poly_matmul: shape mismatch");
    std::size_t nv = !a.entries.empty() ? a.entries[0].nvars()
                                        : (!b.entries.empty() ? b.entries[0].nvars() : 0);
    PolyMatrix out(a.rows, b.cols, nv);
    for (std::size_t r = 0; r < a.rows; ++r)
        for (std::size_t c = 0; c < b.cols; ++c)
            for (std::size_t k = 0; k < a.cols; ++k)
                out.at(r, c) = out.at(r, c) + a.at(r, k) * b.at(k, c);
    return out;
}

LineBundleComplex make_complex(Space space, int min_position,
                               std::vector<std::vector<Twist>> terms,
                               std::vector<PolyMatrix> maps) {
    const SpaceInfo& info = space_info(space);
    if (terms.empty()) throw std::invalid_argument("complex needs at least one position");
    if (maps.size() + 1 != terms.size())
        throw std::invalid_argument("complex needs one map per consecutive pair of positions");
    for (const auto& pos : terms)
        for (const Twist& t : pos)
            if (t.size() != info.ngroups)
                throw std::invalid_argument("twist has the wrong number of coordinates");

    auto groups = group_vars(info);
    for (std::size_t i = 0; i < maps.size(); ++i) {
        const PolyMatrix& m = maps[i];
        if (m.rows != terms[i + 1].size() || m.cols != terms[i].size())
            throw std::invalid_argument("map shape does not match adjacent terms");
        for (const Polynomial& p : m.entries)
            if (p.nvars() != info.nvars)
                throw std::invalid_argument("map entry has the wrong variable count");
        for (std::size_t r = 0; r < m.rows; ++r)
            for (std::size_t c = 0; c < m.cols; ++c) {
                const Polynomial& p = m.at(r, c);
                if (p.is_zero()) continue;
                for (std::size_t g = 0; g < info.ngroups; ++g) {
                    int delta = terms[i + 1][r][g] - terms[i][c][g];
                    if (delta < 0)
                        throw std::invalid_argument(
                            "nonzero map entry where the twist difference is negative");
                    if (p.homogeneous_degree(groups[g]) != delta)
                        throw std::invalid_argument(
                            "map entry is not homogeneous of the twist difference");
                }
            }
    }
    for (std::size_t i = 0; i + 1 < maps.size(); ++i) {
        PolyMatrix comp = poly_matmul(maps[i + 1], maps[i]);
        for (const Polynomial& p : comp.entries)
            if (!p.is_zero())
                throw std::invalid_argument("complex condition fails: composition is nonzero");
    }
    LineBundleComplex c;
    c.space = space;
    c.min_position = min_position;
    c.terms = std::move(terms);
    c.maps = std::move(maps);
    return c;
}

LineBundleComplex single_bundle_complex(Space space, Twist twist, int position) {
    return make_complex(space, position, {{std::move(twist)}}, {});
}

LineBundleComplex twist_complex(const LineBundleComplex& c, const Twist& twist) {
    const SpaceInfo& info = space_info(c.space);
    if (twist.size() != info.ngroups)
        throw std::invalid_argument("twist has the wrong number of coordinates");
    std::vector<std::vector<Twist>> terms = c.terms;
    for (auto& pos : terms)
        for (Twist& t : pos)
            for (std::size_t g = 0; g < info.ngroups; ++g) t[g] += twist[g];
    return make_complex(c.space, c.min_position, std::move(terms), c.maps);
}

LineBundleComplex tensor_complexes(const LineBundleComplex& a, const LineBundleComplex& b) {
    if (a.space != b.space) throw std::invalid_argument("tensor_complexes: different spaces");
    const SpaceInfo& info = space_info(a.space);
    std::size_t na = a.terms.size(), nb = b.terms.size();
    std::size_t npos = na + nb - 1;

    struct Block {
        std::size_t i, j, offset;
    };
    std::vector<std::vector<Block>> layout(npos);
    std::vector<std::vector<Twist>> terms(npos);
    for (std::size_t k = 0; k < npos; ++k) {
        std::size_t off = 0;
        for (std::size_t i = 0; i < na; ++i) {
            if (k < i || k - i >= nb) continue;
            std::size_t j = k - i;
            layout[k].push_back({i, j, off});
            for (const Twist& ta : a.terms[i])
                for (const Twist& tb : b.terms[j]) {
                    Twist t(info.ngroups);
                    for (std::size_t g = 0; g < info.ngroups; ++g) t[g] = ta[g] + tb[g];
                    terms[k].push_back(std::move(t));
                }
            off += a.terms[i].size() * b.terms[j].size();
        }
    }

    std::vector<PolyMatrix> maps;
    for (std::size_t k = 0; k + 1 < npos; ++k) {
        PolyMatrix m(terms[k + 1].size(), terms[k].size(), info.nvars);
        for (const Block& src : layout[k]) {
            std::size_t nta = a.terms[src.i].size();
            std::size_t ntb = b.terms[src.j].size();
            for (const Block& dst : layout[k + 1]) {
                if (dst.i == src.i + 1 && dst.j == src.j) {
                    const PolyMatrix& am = a.maps[src.i];
                    for (std::size_t rt = 0; rt < am.rows; ++rt)
                        for (std::size_t rs = 0; rs < nta; ++rs)
                            for (std::size_t rb = 0; rb < ntb; ++rb)
                                m.at(dst.offset + rt * ntb + rb, src.offset + rs * ntb + rb) =
                                    am.at(rt, rs);
                } else if (dst.i == src.i && dst.j == src.j + 1) {
                    // Koszul sign (-1)^{position of the a factor}
                    int pa = a.min_position + static_cast<int>(src.i);
                    Scalar sign = ((pa % 2 + 2) % 2 == 0) ? Scalar(1) : Scalar(-1);
                    const PolyMatrix& bm = b.maps[src.j];
                    std::size_t ntb2 = b.terms[src.j + 1].size();
                    for (std::size_t rs = 0; rs < nta; ++rs)
                        for (std::size_t rt = 0; rt < bm.rows; ++rt)
                            for (std::size_t rb = 0; rb < ntb; ++rb)
                                m.at(dst.offset + rs * ntb2 + rt, src.offset + rs * ntb + rb) =
                                    bm.at(rt, rb).scaled(sign);
                }
            }
        }
        maps.push_back(std::move(m));
    }
    return make_complex(a.space, a.min_position + b.min_position, std::move(terms),
                        std::move(maps));
}

namespace {

std::vector<long> p1_coh(long m) {
    long h0 = m >= 0 ? m + 1 : 0;
    long h1 = m <= -2 ? -m - 1 : 0;
    return {h0, h1};
}

}  // namespace

std::vector<long> line_bundle_cohomology(Space space, const Twist& twist) {
    const SpaceInfo& info = space_info(space);
    if (twist.size() != info.ngroups)
        throw std::invalid_argument("twist has the wrong number of coordinates");
    switch (space) {
        case Space::P1: return p1_coh(twist[0]);
        case Space::P2: {
            auto count = [](long d) { return d >= 0 ? (d + 1) * (d + 2) / 2 : 0; };
            return {count(twist[0]), 0, count(-twist[0] - 3)};
        }
        case Space::P1xP1: {
            auto ha = p1_coh(twist[0]);
            auto hb = p1_coh(twist[1]);
            return {ha[0] * hb[0], ha[0] * hb[1] + ha[1] * hb[0], ha[1] * hb[1]};
        }
    }
    throw std::logic_error("bad space tag");
}

long chi_line_bundle(Space space, const Twist& twist) {
    auto h = line_bundle_cohomology(space, twist);
    long chi = 0;
    for (std::size_t n = 0; n < h.size(); ++n) chi += (n % 2 == 0) ? h[n] : -h[n];
    return chi;
}

long euler_characteristic(const LineBundleComplex& c) {
    long chi = 0;
    for (std::size_t i = 0; i < c.terms.size(); ++i) {
        int p = c.min_position + static_cast<int>(i);
        long s = ((p % 2 + 2) % 2 == 0) ? 1 : -1;
        for (const Twist& t : c.terms[i]) chi += s * chi_line_bundle(c.space, t);
    }
    return chi;
}

int default_window(const LineBundleComplex& c) {
    int maxtw = 0;
    for (const auto& pos : c.terms)
        for (const Twist& t : pos)
            for (int x : t) maxtw = std::max(maxtw, std::abs(x));
    int mapdeg = 0;
    for (const PolyMatrix& m : c.maps) {
        int d = 0;
        for (const Polynomial& p : m.entries)
            for (const auto& [e, coeff] : p.terms())
                d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
        mapdeg += d;
    }
    return 2 + maxtw + mapdeg;
}

namespace {

// One basis element of the truncated Cech total complex: a Laurent monomial
// of a summand of a term, over the intersection of the charts in `mask`.
struct BasisKey {
    int pos;        // index into terms
    int term;       // summand within the position
    unsigned mask;  // nonempty chart subset
    Exponents e;

    auto operator<=>(const BasisKey&) const = default;
};

void enum_group_monomials(const std::vector<std::size_t>& vars, std::size_t idx, int remaining,
                          const std::vector<char>& neg_ok, int window, Exponents& cur,
                          std::vector<Exponents>& out) {
    std::size_t v = vars[idx];
    int lo = neg_ok[v] ? -window : 0;
    if (idx + 1 == vars.size()) {
        if (remaining >= lo && remaining <= window) {
            cur[v] = remaining;
            out.push_back(cur);
            cur[v] = 0;
        }
        return;
    }
    for (int e = lo; e <= window; ++e) {
        cur[v] = e;
        enum_group_monomials(vars, idx + 1, remaining - e, neg_ok, window, cur, out);
    }
    cur[v] = 0;
}

std::vector<Exponents> enumerate_monomials(const SpaceInfo& info,
                                           const std::vector<std::vector<std::size_t>>& groups,
                                           const Twist& twist, const std::vector<char>& neg_ok,
                                           int window) {
    std::vector<Exponents> acc{Exponents(info.nvars, 0)};
    for (std::size_t g = 0; g < info.ngroups; ++g) {
        std::vector<Exponents> next;
        for (const Exponents& base : acc) {
            Exponents cur = base;
            enum_group_monomials(groups[g], 0, twist[g], neg_ok, window, cur, next);
        }
        acc = std::move(next);
    }
    return acc;
}

std::map<int, long> compute_h(const LineBundleComplex& c, int window) {
    const SpaceInfo& info = space_info(c.space);
    auto groups = group_vars(info);
    std::size_t ncharts = info.charts.size();
    unsigned full = 1u << ncharts;

    std::vector<std::vector<char>> neg_ok(full, std::vector<char>(info.nvars, 0));
    for (unsigned mask = 1; mask < full; ++mask)
        for (std::size_t ch = 0; ch < ncharts; ++ch)
            if (mask >> ch & 1)
                for (std::size_t v : info.charts[ch]) neg_ok[mask][v] = 1;

    std::map<int, std::vector<BasisKey>> basis;
    for (std::size_t i = 0; i < c.terms.size(); ++i)
        for (std::size_t t = 0; t < c.terms[i].size(); ++t)
            for (unsigned mask = 1; mask < full; ++mask) {
                int deg = c.min_position + static_cast<int>(i) + std::popcount(mask) - 1;
                for (Exponents& e :
                     enumerate_monomials(info, groups, c.terms[i][t], neg_ok[mask], window))
                    basis[deg].push_back({static_cast<int>(i), static_cast<int>(t), mask,
                                          std::move(e)});
            }

    std::map<int, std::map<BasisKey, std::size_t>> index;
    for (auto& [deg, keys] : basis) {
        std::sort(keys.begin(), keys.end());
        auto& idx = index[deg];
        for (std::size_t j = 0; j < keys.size(); ++j) idx.emplace(keys[j], j);
    }

    // rank of the total differential out of each degree
    std::map<int, std::size_t> rank_at;
    for (auto& [deg, keys] : basis) {
        auto itn = index.find(deg + 1);
        std::size_t nrows = itn == index.end() ? 0 : itn->second.size();
        if (nrows == 0 || keys.empty()) {
            rank_at[deg] = 0;
            continue;
        }
        const auto& tgt = itn->second;
        SparseMatrix m(nrows, keys.size());
        for (std::size_t col = 0; col < keys.size(); ++col) {
            const BasisKey& k = keys[col];
            int p = c.min_position + k.pos;
            // Cech part, weighted by (-1)^p to make the total square zero
            int below = 0;
            for (std::size_t ch = 0; ch < ncharts; ++ch) {
                if (k.mask >> ch & 1) {
                    ++below;
                    continue;
                }
                BasisKey k2{k.pos, k.term, k.mask | (1u << ch), k.e};
                auto it = tgt.find(k2);
                if (it == tgt.end()) throw std::logic_error("missing Cech target");
                bool neg = ((below + p) % 2 + 2) % 2 == 1;
                m.add(it->second, col, neg ? Scalar(-1) : Scalar(1));
            }
            // map part
            if (k.pos + 1 < static_cast<int>(c.terms.size())) {
                const PolyMatrix& pm = c.maps[k.pos];
                for (std::size_t r = 0; r < pm.rows; ++r) {
                    const Polynomial& entry = pm.at(r, static_cast<std::size_t>(k.term));
                    for (const auto& [delta, coeff] : entry.terms()) {
                        Exponents e2 = k.e;
                        bool inside = true;
                        for (std::size_t v = 0; v < e2.size(); ++v) {
                            e2[v] += delta[v];
                            if (e2[v] > window) inside = false;
                        }
                        if (!inside) continue;  // truncated away
                        BasisKey k2{k.pos + 1, static_cast<int>(r), k.mask, std::move(e2)};
                        auto it = tgt.find(k2);
                        if (it == tgt.end()) throw std::logic_error("missing map target");
                        m.add(it->second, col, coeff);
                    }
                }
            }
        }
        rank_at[deg] = std::move(m).rank();
    }

    std::map<int, long> h;
    for (auto& [deg, keys] : basis) {
        auto prev = rank_at.find(deg - 1);
        long val = static_cast<long>(keys.size()) - static_cast<long>(rank_at[deg]) -
                   static_cast<long>(prev == rank_at.end() ? 0 : prev->second);
        if (val < 0) throw std::logic_error("negative cohomology dimension");
        if (val != 0) h[deg] = val;
    }
    return h;
}

}  // namespace

CohomologyReport hypercohomology(const LineBundleComplex& c, std::optional<int> window) {
    int minw = default_window(c);
    int w = window.value_or(minw);
    if (w < minw)
        throw std::invalid_argument("window " + std::to_string(w) + " is below the minimum " +
                                    std::to_string(minw) + " for this complex");
    CohomologyReport rep;
    rep.window_used = w;
    auto first = compute_h(c, w);
    auto second = compute_h(c, w + 2);
    rep.window_stable = first == second;
    rep.h = std::move(second);
    rep.euler = euler_characteristic(c);
    long alt = 0;
    for (const auto& [n, v] : rep.h) alt += (((n % 2) + 2) % 2 == 0) ? v : -v;
    if (alt != rep.euler)
        throw std::runtime_error("euler cross-check failed: alternating sum " +
                                 std::to_string(alt) + " vs closed form " +
                                 std::to_string(rep.euler));
    return rep;
}

namespace {

// Monomial bases of H^0 / H^2 of O(d) on P2: exponents >= 0 (resp. <= -1)
// summing to d, in lexicographic order.
void enum_signed_monomials(int nvars, int idx, int remaining, int lo_sign, Exponents& cur,
                           std::vector<Exponents>& out) {
    if (idx + 1 == nvars) {
        if ((lo_sign > 0 && remaining >= 0) || (lo_sign < 0 && remaining <= -1)) {
            cur[idx] = remaining;
            out.push_back(cur);
        }
        return;
    }
    if (lo_sign > 0) {
        for (int e = 0; e <= remaining; ++e) {
            cur[idx] = e;
            enum_signed_monomials(nvars, idx + 1, remaining - e, lo_sign, cur, out);
        }
    } else {
        for (int e = remaining + (nvars - 1 - idx); e <= -1; ++e) {
            cur[idx] = e;
            enum_signed_monomials(nvars, idx + 1, remaining - e, lo_sign, cur, out);
        }
    }
}

std::vector<Exponents> p2_monomials(int d, int lo_sign) {
    std::vector<Exponents> out;
    Exponents cur(3, 0);
    enum_signed_monomials(3, 0, d, lo_sign, cur, out);
    return out;
}

}  // namespace

std::map<int, long> hypercohomology_two_row_p2(const LineBundleComplex& c) {
    if (c.space != Space::P2)
        throw std::invalid_argument("two-row computation is specific to P2");
    if (c.terms.size() > 3)
        throw std::invalid_argument("two-row computation limited to three-term complexes");

    std::map<int, long> h;
    for (int q : {0, 2}) {
        int lo_sign = q == 0 ? 1 : -1;
        std::vector<std::vector<std::vector<Exponents>>> bases(c.terms.size());
        std::vector<std::size_t> dims(c.terms.size(), 0);
        for (std::size_t i = 0; i < c.terms.size(); ++i)
            for (const Twist& t : c.terms[i]) {
                bases[i].push_back(p2_monomials(t[0], lo_sign));
                dims[i] += bases[i].back().size();
            }

        std::vector<std::size_t> ranks(c.maps.size(), 0);
        for (std::size_t i = 0; i < c.maps.size(); ++i) {
            RationalMatrix m(dims[i + 1], dims[i]);
            std::vector<std::size_t> row_off(bases[i + 1].size() + 1, 0);
            for (std::size_t r = 0; r < bases[i + 1].size(); ++r)
                row_off[r + 1] = row_off[r] + bases[i + 1][r].size();
            std::size_t col = 0;
            for (std::size_t t = 0; t < bases[i].size(); ++t)
                for (const Exponents& e : bases[i][t]) {
                    for (std::size_t r = 0; r < c.maps[i].rows; ++r) {
                        const Polynomial& entry = c.maps[i].at(r, t);
                        for (const auto& [delta, coeff] : entry.terms()) {
                            Exponents e2 = e;
                            bool keep = true;
                            for (std::size_t v = 0; v < 3; ++v) {
                                e2[v] += delta[v];
                                if (q == 2 && e2[v] >= 0) keep = false;
                            }
                            if (!keep) continue;
                            const auto& tb = bases[i + 1][r];
                            auto it = std::lower_bound(tb.begin(), tb.end(), e2);
                            if (it == tb.end() || *it != e2)
                                throw std::logic_error("missing monomial in two-row basis");
                            std::size_t row = row_off[r] + (it - tb.begin());
                            m.at(row, col) += coeff;
                        }
                    }
                    ++col;
                }
            ranks[i] = rank(m);
        }

        for (std::size_t i = 0; i < c.terms.size(); ++i) {
            long out = i < ranks.size() ? static_cast<long>(ranks[i]) : 0;
            long in = i > 0 ? static_cast<long>(ranks[i - 1]) : 0;
            long e2 = static_cast<long>(dims[i]) - out - in;
            if (e2 < 0) throw std::logic_error("negative page dimension");
            if (e2 != 0) h[c.min_position + static_cast<int>(i) + q] += e2;
        }
    }
    return h;
}

LineBundleComplex restrict_to_curve(const LineBundleComplex& c, const CurveModel& curve) {
    if (c.space == Space::P1)
        throw std::invalid_argument("restriction needs a complex on a surface");
    SurfaceTag tag = curve.cls.surface;
    if (space_of_surface(tag) != c.space)
        throw std::invalid_argument("curve lives on a different surface");
    const SurfaceKind& kind = surface_info(tag);

    std::vector<long> degs(kind.picard_rank);
    for (int g = 0; g < kind.picard_rank; ++g) {
        std::vector<long> unit(kind.picard_rank, 0);
        unit[g] = 1;
        degs[g] = intersect(divisor(tag, std::move(unit)), curve.cls);
    }

    std::vector<std::vector<Twist>> terms;
    for (const auto& pos : c.terms) {
        std::vector<Twist> row;
        for (const Twist& t : pos) {
            long d = 0;
            for (std::size_t g = 0; g < t.size(); ++g) d += t[g] * degs[g];
            row.push_back({static_cast<int>(d)});
        }
        terms.push_back(std::move(row));
    }
    std::vector<PolyMatrix> maps;
    for (const PolyMatrix& pm : c.maps) {
        PolyMatrix m(pm.rows, pm.cols, 2);
        for (std::size_t k = 0; k < pm.entries.size(); ++k)
            m.entries[k] = pm.entries[k].substitute(curve.parametrization, 2);
        maps.push_back(std::move(m));
    }
    return make_complex(Space::P1, c.min_position, std::move(terms), std::move(maps));
}

long fiber_homology_dim(const LineBundleComplex& c, const std::vector<Scalar>& point) {
    const SpaceInfo& info = space_info(c.space);
    if (point.size() != info.nvars)
        throw std::invalid_argument("point has the wrong number of coordinates");
    for (const auto& vars : group_vars(info)) {
        bool nonzero = false;
        for (std::size_t v : vars)
            if (point[v] != 0) nonzero = true;
        if (!nonzero) throw std::invalid_argument("point has an all-zero coordinate group");
    }
    if (c.min_position > 0 || c.max_position() < 0)
        throw std::invalid_argument("complex has no term in position 0");
    std::size_t idx0 = static_cast<std::size_t>(-c.min_position);

    auto eval = [&](const PolyMatrix& pm) {
        RationalMatrix m(pm.rows, pm.cols);
        for (std::size_t r = 0; r < pm.rows; ++r)
            for (std::size_t col = 0; col < pm.cols; ++col)
                m.at(r, col) = pm.at(r, col).evaluate(point);
        return m;
    };
    long dim0 = static_cast<long>(c.terms[idx0].size());
    long rank_out = idx0 < c.maps.size() ? static_cast<long>(rank(eval(c.maps[idx0]))) : 0;
    long rank_in = idx0 > 0 ? static_cast<long>(rank(eval(c.maps[idx0 - 1]))) : 0;
    return dim0 - rank_out - rank_in;
}

std::vector<int> splitting_type(const LineBundleComplex& c) {
    if (c.space != Space::P1)
        throw std::invalid_argument("splitting_type needs a complex on P1");

    int tw_min = 0, tw_max = 0;
    bool any = false;
    for (const auto& pos : c.terms)
        for (const Twist& t : pos) {
            tw_min = any ? std::min(tw_min, t[0]) : t[0];
            tw_max = any ? std::max(tw_max, t[0]) : t[0];
            any = true;
        }
    long chi0 = euler_characteristic(c);
    if (!any) {
        if (chi0 != 0) throw std::logic_error("empty complex with nonzero euler");
        return {};
    }

    // locally free check: constant fiber dimension at enough sample points
    int degbound = default_window(c) - 2;  // max|twist| + total map degree
    int npoints = degbound + (tw_max - tw_min) + 3;
    long r = -1;
    for (int k = 0; k <= npoints; ++k) {
        std::vector<Scalar> pt = k == npoints ? std::vector<Scalar>{Scalar(0), Scalar(1)}
                                              : std::vector<Scalar>{Scalar(1), Scalar(k)};
        long d = fiber_homology_dim(c, pt);
        if (r < 0) r = d;
        if (d != r)
            throw std::runtime_error("fiber rank jumps; homology is not locally free");
    }
    long deg = chi0 - r;
    if (r == 0) {
        if (deg != 0) throw std::runtime_error("rank zero with nonzero degree");
        return {};
    }

    auto h0 = [&](int t) { return hypercohomology(twist_complex(c, {t})).h_at(0); };

    // h0(E(t)) vanishes for t << 0 when E is a bundle; torsion would prevent this
    int t_lo = -tw_max - 1;
    long f_lo = h0(t_lo);
    int guard = 0;
    while (f_lo > 0) {
        --t_lo;
        f_lo = h0(t_lo);
        if (++guard > 100)
            throw std::runtime_error("sections persist at all twists; homology has torsion");
    }

    // splitting degrees from the jumps of t -> h0(E(t))
    std::vector<int> result;
    long prev_f = f_lo;
    long prev_ge = 0;
    for (int t = t_lo + 1; static_cast<long>(result.size()) < r; ++t) {
        long ft = h0(t);
        long ge = ft - prev_f;  // number of splitting degrees >= -t
        if (ge < prev_ge || ge > r)
            throw std::runtime_error("section counts inconsistent with a bundle");
        for (long i = prev_ge; i < ge; ++i) result.push_back(-t);
        prev_f = ft;
        prev_ge = ge;
        if (t > t_lo + 200) throw std::runtime_error("splitting scan did not terminate");
    }
    long total = std::accumulate(result.begin(), result.end(), 0L);
    if (total != deg)
        throw std::runtime_error("splitting degrees inconsistent with the euler characteristic");
    return result;
}

}  // namespace fsq
