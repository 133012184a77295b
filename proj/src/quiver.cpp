#include "fsq/quiver.hpp"

#include <random>
#include <stdexcept>

namespace fsq {

const Arrow& Quiver::arrow_by_id(int id) const {
    for (const auto& a : arrows)
        if (a.id == id) return a;
    throw std::invalid_argument("unknown arrow id " + std::to_string(id));
}

int relation_source(const Quiver& q, const Relation& rel) {
    if (rel.empty() || rel.front().path.empty()) throw std::invalid_argument("empty relation");
    return q.arrow_by_id(rel.front().path.front()).src;
}

int relation_target(const Quiver& q, const Relation& rel) {
    if (rel.empty() || rel.front().path.empty()) throw std::invalid_argument("empty relation");
    return q.arrow_by_id(rel.front().path.back()).dst;
}

Representation zero_representation(const Quiver& q, DimVector dims) {
    if (static_cast<int>(dims.size()) != q.vertex_count)
        throw std::invalid_argument("dimension vector length mismatch");
    Representation rep{std::move(dims), {}};
    for (const auto& a : q.arrows)
        rep.mats.emplace_back(static_cast<std::size_t>(rep.dims[a.dst]),
                              static_cast<std::size_t>(rep.dims[a.src]));
    return rep;
}

std::pair<Quiver, RelationSet> preset_p2() {
    Quiver q;
    q.vertex_count = 3;
    // a_m: 0->1 (ids 0..2), b_m: 1->2 (ids 3..5)
    for (int m = 0; m < 3; ++m) {
        q.arrows.push_back({m, 0, 1});
        q.arrow_names.push_back("a" + std::to_string(m + 1));
    }
    for (int m = 0; m < 3; ++m) {
        q.arrows.push_back({3 + m, 1, 2});
        q.arrow_names.push_back("b" + std::to_string(m + 1));
    }
    RelationSet rels;
    for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j) {
            Relation rel;
            rel.push_back({Scalar(1), {j, 3 + i}});  // b_i a_j
            if (i != j) rel.push_back({Scalar(1), {i, 3 + j}});  // + b_j a_i
            rels.relations.push_back(std::move(rel));
        }
    return {std::move(q), std::move(rels)};
}

std::pair<Quiver, RelationSet> preset_p1xp1() {
    Quiver q;
    q.vertex_count = 4;
    // Vertices are ordered compatibly with the dimension-vector matrix rows,
    // which puts the two middle vertices at 1 and 2 and the sink at 3.
    // a1_m: 0->1 (ids 0,1), a2_m: 0->2 (ids 2,3), b1_m: 1->3 (ids 4,5), b2_m: 2->3 (ids 6,7)
    for (int m = 0; m < 2; ++m) {
        q.arrows.push_back({m, 0, 1});
        q.arrow_names.push_back("a1_" + std::to_string(m + 1));
    }
    for (int m = 0; m < 2; ++m) {
        q.arrows.push_back({2 + m, 0, 2});
        q.arrow_names.push_back("a2_" + std::to_string(m + 1));
    }
    for (int m = 0; m < 2; ++m) {
        q.arrows.push_back({4 + m, 1, 3});
        q.arrow_names.push_back("b1_" + std::to_string(m + 1));
    }
    for (int m = 0; m < 2; ++m) {
        q.arrows.push_back({6 + m, 2, 3});
        q.arrow_names.push_back("b2_" + std::to_string(m + 1));
    }
    RelationSet rels;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            Relation rel;
            rel.push_back({Scalar(1), {j, 4 + i}});      // b1_i a1_j
            rel.push_back({Scalar(1), {2 + i, 6 + j}});  // + b2_j a2_i
            rels.relations.push_back(std::move(rel));
        }
    return {std::move(q), std::move(rels)};
}

namespace {

RationalMatrix compose_path(const Quiver& q, const Representation& rep,
                            const std::vector<int>& path) {
    const Arrow& first = q.arrow_by_id(path.front());
    RationalMatrix m = RationalMatrix::identity(static_cast<std::size_t>(rep.dims[first.src]));
    for (int id : path) m = rep.mats.at(static_cast<std::size_t>(id)) * m;
    return m;
}

}  // namespace

RelationCheck check_relations(const Quiver& q, const RelationSet& rels, const Representation& rep) {
    RelationCheck out{true, {}};
    for (std::size_t k = 0; k < rels.relations.size(); ++k) {
        const Relation& rel = rels.relations[k];
        int src = relation_source(q, rel);
        int dst = relation_target(q, rel);
        RationalMatrix total(static_cast<std::size_t>(rep.dims[dst]),
                             static_cast<std::size_t>(rep.dims[src]));
        for (const auto& term : rel) total = total + compose_path(q, rep, term.path).scaled(term.coeff);
        if (!total.is_zero()) {
            out.ok = false;
            out.violated.push_back(k);
        }
    }
    return out;
}

HomSpace hom_space(const Quiver& q, const Representation& rep1, const Representation& rep2) {
    // Unknowns: entries of phi_v (d2_v x d1_v), flattened vertex by vertex.
    std::vector<std::size_t> offset(static_cast<std::size_t>(q.vertex_count) + 1, 0);
    for (int v = 0; v < q.vertex_count; ++v)
        offset[static_cast<std::size_t>(v) + 1] =
            offset[static_cast<std::size_t>(v)] +
            static_cast<std::size_t>(rep2.dims[v] * rep1.dims[v]);
    std::size_t unknowns = offset.back();

    std::size_t eq_count = 0;
    for (const auto& a : q.arrows)
        eq_count += static_cast<std::size_t>(rep2.dims[a.dst] * rep1.dims[a.src]);

    RationalMatrix system(eq_count, unknowns);
    std::size_t row = 0;
    for (std::size_t ai = 0; ai < q.arrows.size(); ++ai) {
        const Arrow& a = q.arrows[ai];
        const RationalMatrix& m1 = rep1.mats[ai];
        const RationalMatrix& m2 = rep2.mats[ai];
        // Equation (r,c): sum_s phi_dst(r,s) m1(s,c) - sum_s m2(r,s) phi_src(s,c) = 0
        for (long r = 0; r < rep2.dims[a.dst]; ++r)
            for (long c = 0; c < rep1.dims[a.src]; ++c) {
                for (long s = 0; s < rep1.dims[a.dst]; ++s) {
                    std::size_t col = offset[a.dst] + static_cast<std::size_t>(r * rep1.dims[a.dst] + s);
                    system.at(row, col) += m1.at(static_cast<std::size_t>(s), static_cast<std::size_t>(c));
                }
                for (long s = 0; s < rep2.dims[a.src]; ++s) {
                    std::size_t col = offset[a.src] + static_cast<std::size_t>(s * rep1.dims[a.src] + c);
                    system.at(row, col) -= m2.at(static_cast<std::size_t>(r), static_cast<std::size_t>(s));
                }
                ++row;
            }
    }

    HomSpace out;
    for (const auto& vec : kernel_basis(system)) {
        std::vector<RationalMatrix> blocks;
        for (int v = 0; v < q.vertex_count; ++v) {
            RationalMatrix phi(static_cast<std::size_t>(rep2.dims[v]),
                               static_cast<std::size_t>(rep1.dims[v]));
            for (long r = 0; r < rep2.dims[v]; ++r)
                for (long c = 0; c < rep1.dims[v]; ++c)
                    phi.at(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) =
                        vec[offset[v] + static_cast<std::size_t>(r * rep1.dims[v] + c)];
            blocks.push_back(std::move(phi));
        }
        out.basis.push_back(std::move(blocks));
    }
    out.dim = out.basis.size();
    return out;
}

namespace {

bool blocks_invertible(const std::vector<RationalMatrix>& blocks) {
    for (const auto& b : blocks) {
        if (b.rows() != b.cols()) return false;
        if (b.rows() == 0) continue;
        if (rank(b) != b.rows()) return false;
    }
    return true;
}

std::vector<RationalMatrix> combine(const HomSpace& hom, const std::vector<Scalar>& coeffs,
                                    int vertex_count) {
    std::vector<RationalMatrix> total;
    for (int v = 0; v < vertex_count; ++v) {
        RationalMatrix m(hom.basis[0][static_cast<std::size_t>(v)].rows(),
                         hom.basis[0][static_cast<std::size_t>(v)].cols());
        for (std::size_t k = 0; k < hom.basis.size(); ++k)
            m = m + hom.basis[k][static_cast<std::size_t>(v)].scaled(coeffs[k]);
        total.push_back(std::move(m));
    }
    return total;
}

}  // namespace

bool is_isomorphic(const Quiver& q, const Representation& rep1, const Representation& rep2,
                   unsigned seed) {
    if (rep1.dims != rep2.dims) return false;
    long total_dim = 0;
    for (long d : rep1.dims) total_dim += d;
    if (total_dim == 0) return true;

    HomSpace hom = hom_space(q, rep1, rep2);
    if (hom.dim == 0) return false;

    // Invertible intertwiners form a Zariski-open subset of the hom space,
    // so random combinations find one with overwhelming probability.
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(-5, 5);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Scalar> coeffs(hom.dim);
        for (auto& c : coeffs) c = Scalar(num(rng));
        if (blocks_invertible(combine(hom, coeffs, q.vertex_count))) return true;
    }

    // Deterministic fallback at tiny sizes: enumerate coefficients in {-2..2}.
    if (total_dim <= 9 && hom.dim <= 6) {
        std::vector<Scalar> coeffs(hom.dim, Scalar(-2));
        std::vector<int> raw(hom.dim, -2);
        while (true) {
            for (std::size_t k = 0; k < hom.dim; ++k) coeffs[k] = Scalar(raw[k]);
            if (blocks_invertible(combine(hom, coeffs, q.vertex_count))) return true;
            std::size_t pos = 0;
            while (pos < hom.dim && raw[pos] == 2) raw[pos++] = -2;
            if (pos == hom.dim) break;
            ++raw[pos];
        }
    }
    return false;
}

long euler_form(const Quiver& q, const RelationSet& rels, const DimVector& d, const DimVector& e) {
    long total = 0;
    for (int v = 0; v < q.vertex_count; ++v) total += d[v] * e[v];
    for (const auto& a : q.arrows) total -= d[a.src] * e[a.dst];
    for (const auto& rel : rels.relations)
        total += d[relation_source(q, rel)] * e[relation_target(q, rel)];
    return total;
}

DimVector dimension_vector(SurfaceTag surface, const NumericalClass& v) {
    auto collection = exceptional_collection(surface);
    ChernCharacter chv = to_chern(v);
    DimVector d;
    for (const auto& e : collection) {
        Scalar val = -chi_pair(e, chv);
        if (!is_integer(val))
            throw std::domain_error("non-integral dimension vector entry " + scalar_to_string(val));
        long entry = to_long(val);
        if (entry < 0)
            throw std::domain_error("negative dimension vector entry " + std::to_string(entry) +
                                    ": class is not realized in the heart");
        d.push_back(entry);
    }
    return d;
}

RationalMatrix dimension_vector_matrix(SurfaceTag surface) {
    if (surface == SurfaceTag::P2)
        return RationalMatrix::from_longs(3, 3, {1, 2, -1, 3, 3, -2, 1, 1, -1});
    return RationalMatrix::from_longs(4, 4, {1, 1, 2, -1, 2, 0, 2, -1, 1, 1, 1, -1, 1, 0, 1, -1});
}

namespace {

void enumerate_paths(const Quiver& q, int at, int dst, std::size_t remaining,
                     std::vector<int>& current, std::vector<std::vector<int>>& out) {
    if (remaining == 0) {
        if (at == dst) out.push_back(current);
        return;
    }
    for (const auto& a : q.arrows) {
        if (a.src != at) continue;
        current.push_back(a.id);
        enumerate_paths(q, a.dst, dst, remaining - 1, current, out);
        current.pop_back();
    }
}

std::vector<std::vector<int>> paths_of_length(const Quiver& q, int src, int dst, std::size_t len) {
    std::vector<std::vector<int>> out;
    std::vector<int> current;
    enumerate_paths(q, src, dst, len, current, out);
    return out;
}

}  // namespace

long path_space_dim(const Quiver& q, const RelationSet& rels, int i, int j) {
    long total = 0;
    for (std::size_t len = 0; len <= static_cast<std::size_t>(q.vertex_count); ++len) {
        auto paths = paths_of_length(q, i, j, len);
        if (paths.empty()) continue;
        // Ideal elements of this length: suffix * relation * prefix, with
        // composable prefixes i -> src(rel) and suffixes tgt(rel) -> j.
        std::vector<std::vector<Scalar>> ideal_rows;
        for (const auto& rel : rels.relations) {
            std::size_t rel_len = rel.front().path.size();
            if (rel_len > len) continue;
            int rs = relation_source(q, rel);
            int rt = relation_target(q, rel);
            for (std::size_t pre_len = 0; pre_len + rel_len <= len; ++pre_len) {
                std::size_t suf_len = len - rel_len - pre_len;
                for (const auto& pre : paths_of_length(q, i, rs, pre_len))
                    for (const auto& suf : paths_of_length(q, rt, j, suf_len)) {
                        std::vector<Scalar> row(paths.size(), Scalar(0));
                        for (const auto& term : rel) {
                            std::vector<int> full = pre;
                            full.insert(full.end(), term.path.begin(), term.path.end());
                            full.insert(full.end(), suf.begin(), suf.end());
                            for (std::size_t p = 0; p < paths.size(); ++p)
                                if (paths[p] == full) row[p] += term.coeff;
                        }
                        ideal_rows.push_back(std::move(row));
                    }
            }
        }
        long quotient = static_cast<long>(paths.size());
        if (!ideal_rows.empty()) {
            RationalMatrix m(ideal_rows.size(), paths.size());
            for (std::size_t r = 0; r < ideal_rows.size(); ++r)
                for (std::size_t c = 0; c < paths.size(); ++c) m.at(r, c) = ideal_rows[r][c];
            quotient -= static_cast<long>(rank(m));
        }
        total += quotient;
    }
    return total;
}

}  // namespace fsq
