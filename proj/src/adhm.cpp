#include "fsq/adhm.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace fsq {

namespace {

std::vector<std::vector<Scalar>> matrix_columns(const RationalMatrix& m) {
    std::vector<std::vector<Scalar>> cols(m.cols(), std::vector<Scalar>(m.rows()));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) cols[c][r] = m.at(r, c);
    return cols;
}

}  // namespace

AdhmDatum zero_adhm(std::size_t k, std::size_t r) {
    return AdhmDatum{k, r, RationalMatrix(k, k), RationalMatrix(k, k), RationalMatrix(k, r),
                     RationalMatrix(r, k)};
}

void validate_adhm(const AdhmDatum& d) {
    if (d.r == 0) throw std::invalid_argument("r must be positive");
    if (d.b1.rows() != d.k || d.b1.cols() != d.k || d.b2.rows() != d.k || d.b2.cols() != d.k)
        throw std::invalid_argument("B1, B2 must be k x k");
    if (d.i.rows() != d.k || d.i.cols() != d.r) throw std::invalid_argument("i must be k x r");
    if (d.j.rows() != d.r || d.j.cols() != d.k) throw std::invalid_argument("j must be r x k");
}

RationalMatrix adhm_residual(const AdhmDatum& d) {
    validate_adhm(d);
    return d.b1 * d.b2 - d.b2 * d.b1 + d.i * d.j;
}

bool check_equation(const AdhmDatum& d) { return adhm_residual(d).is_zero(); }

namespace {

bool krylov_spans(const RationalMatrix& b1, const RationalMatrix& b2, const RationalMatrix& seed,
                  std::size_t k) {
    Subspace span = sum_subspaces(matrix_columns(seed), {}, k);
    for (;;) {
        std::size_t before = span.size();
        RationalMatrix cur = columns_to_matrix(span, k);
        span = sum_subspaces(span, matrix_columns(b1 * cur), k);
        span = sum_subspaces(span, matrix_columns(b2 * cur), k);
        if (span.size() == before) break;
    }
    return span.size() == k;
}

}  // namespace

bool is_stable(const AdhmDatum& d) {
    validate_adhm(d);
    if (d.k == 0) return true;
    return krylov_spans(d.b1, d.b2, d.i, d.k);
}

bool is_costable(const AdhmDatum& d) {
    validate_adhm(d);
    if (d.k == 0) return true;
    // the largest invariant subspace in ker(j) is 0 iff the transposed datum
    // is stable (im j^T generates under B1^T, B2^T)
    return krylov_spans(d.b1.transpose(), d.b2.transpose(), d.j.transpose(), d.k);
}

LineBundleComplex monad_from_adhm(const AdhmDatum& d) {
    validate_adhm(d);
    RationalMatrix res = adhm_residual(d);
    if (!res.is_zero()) {
        std::string msg = "ADHM equation fails; residual [B1,B2]+ij =";
        for (std::size_t r = 0; r < res.rows(); ++r) {
            msg += " [";
            for (std::size_t c = 0; c < res.cols(); ++c)
                msg += (c ? " " : "") + scalar_to_string(res.at(r, c));
            msg += "]";
        }
        throw std::runtime_error(msg);
    }

    std::size_t k = d.k, r = d.r;
    std::size_t mid = 2 * k + r;
    auto x0 = Polynomial::variable(3, 0);
    auto x1 = Polynomial::variable(3, 1);
    auto x2 = Polynomial::variable(3, 2);
    auto lin = [&](const Scalar& coeff, const Polynomial& var, const Scalar& id_coeff,
                   const Polynomial& id_var) {
        return var.scaled(coeff) + id_var.scaled(id_coeff);
    };

    PolyMatrix alpha(mid, k, 3);
    PolyMatrix beta(k, mid, 3);
    for (std::size_t m = 0; m < k; ++m)
        for (std::size_t n = 0; n < k; ++n) {
            Scalar delta = m == n ? Scalar(1) : Scalar(0);
            alpha.at(m, n) = lin(d.b1.at(m, n), x2, -delta, x0);
            alpha.at(k + m, n) = lin(d.b2.at(m, n), x2, -delta, x1);
            beta.at(m, n) = lin(-d.b2.at(m, n), x2, delta, x1);
            beta.at(m, k + n) = lin(d.b1.at(m, n), x2, -delta, x0);
        }
    for (std::size_t a = 0; a < r; ++a)
        for (std::size_t n = 0; n < k; ++n) {
            alpha.at(2 * k + a, n) = x2.scaled(d.j.at(a, n));
            beta.at(n, 2 * k + a) = x2.scaled(d.i.at(n, a));
        }

    std::vector<std::vector<Twist>> terms{std::vector<Twist>(k, Twist{-1}),
                                          std::vector<Twist>(mid, Twist{0}),
                                          std::vector<Twist>(k, Twist{1})};
    return make_complex(Space::P2, -1, std::move(terms), {std::move(alpha), std::move(beta)});
}

FiberHomology fiber_homology(const LineBundleComplex& monad, const std::vector<Scalar>& point) {
    const SpaceInfo& info = space_info(monad.space);
    if (point.size() != info.nvars)
        throw std::invalid_argument("point has the wrong number of coordinates");
    bool all_zero = true;
    for (const Scalar& x : point)
        if (x != 0) all_zero = false;
    if (all_zero) throw std::invalid_argument("point coordinates are all zero");
    if (monad.min_position > 0 || monad.max_position() < 0)
        throw std::invalid_argument("complex has no term in position 0");
    std::size_t idx0 = static_cast<std::size_t>(-monad.min_position);
    std::size_t dim0 = monad.terms[idx0].size();

    auto eval = [&](const PolyMatrix& pm) {
        RationalMatrix m(pm.rows, pm.cols);
        for (std::size_t r = 0; r < pm.rows; ++r)
            for (std::size_t c = 0; c < pm.cols; ++c) m.at(r, c) = pm.at(r, c).evaluate(point);
        return m;
    };
    RationalMatrix out =
        idx0 < monad.maps.size() ? eval(monad.maps[idx0]) : RationalMatrix(0, dim0);
    RationalMatrix in = idx0 > 0 ? eval(monad.maps[idx0 - 1]) : RationalMatrix(dim0, 0);

    Subspace image = sum_subspaces(matrix_columns(in), {}, dim0);
    Subspace span = image;
    FiberHomology fh{0, {}};
    for (const auto& v : kernel_basis(out)) {
        Subspace bigger = sum_subspaces(span, {v}, dim0);
        if (bigger.size() > span.size()) {
            span = std::move(bigger);
            fh.basis.push_back(v);
        }
    }
    fh.dim = static_cast<long>(fh.basis.size());
    return fh;
}

std::vector<std::vector<Scalar>> ell_infty_sample_points() {
    return {{Scalar(1), Scalar(0), Scalar(0)},
            {Scalar(0), Scalar(1), Scalar(0)},
            {Scalar(1), Scalar(1), Scalar(0)},
            {Scalar(1), Scalar(-1), Scalar(0)},
            {Scalar(2), Scalar(1), Scalar(0)}};
}

CanonicalFraming canonical_framing(const AdhmDatum& d) {
    // In this normal form the restriction to the framing line is the W-block
    // at every point regardless of stability, so the sample-point check alone
    // cannot detect an unstable datum; enforce stability up front.
    if (!is_stable(d)) throw std::runtime_error("datum is not stable");
    LineBundleComplex monad = monad_from_adhm(d);
    CanonicalFraming out;
    out.rank = d.r;
    std::size_t mid = 2 * d.k + d.r;
    for (std::size_t a = 0; a < d.r; ++a) {
        std::vector<Scalar> section(mid, Scalar(0));
        section[2 * d.k + a] = 1;
        out.sections.push_back(std::move(section));
    }
    for (const auto& p : ell_infty_sample_points()) {
        FiberHomology fh = fiber_homology(monad, p);
        if (fh.dim != static_cast<long>(d.r))
            throw std::runtime_error("fiber dimension on the framing line is " +
                                     std::to_string(fh.dim) + ", expected " +
                                     std::to_string(d.r) + " (datum not stable?)");
        RationalMatrix proj(d.r, d.r);
        for (std::size_t a = 0; a < d.r; ++a)
            for (std::size_t b = 0; b < d.r; ++b) proj.at(a, b) = fh.basis[b][2 * d.k + a];
        if (!inverse(proj))
            throw std::runtime_error("W-projection is singular at a sample point");
        out.projections.push_back(std::move(proj));
    }
    return out;
}

namespace {

void partitions_rec(std::size_t k, std::size_t max_part, std::vector<std::size_t>& cur,
                    std::vector<std::vector<std::size_t>>& out) {
    if (k == 0) {
        out.push_back(cur);
        return;
    }
    for (std::size_t p = std::min(k, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(k - p, p, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<AdhmDatum> torus_fixed_points(std::size_t k, std::size_t r) {
    if (r != 1) throw std::invalid_argument("torus fixed points are only enumerated for r = 1");
    std::vector<std::vector<std::size_t>> parts;
    std::vector<std::size_t> cur;
    partitions_rec(k, k == 0 ? 1 : k, cur, parts);

    std::vector<AdhmDatum> out;
    for (const auto& lambda : parts) {
        // boxes (a, b) with b < lambda[a], indexed in row-major order
        std::vector<std::pair<std::size_t, std::size_t>> boxes;
        std::map<std::pair<std::size_t, std::size_t>, std::size_t> index;
        for (std::size_t a = 0; a < lambda.size(); ++a)
            for (std::size_t b = 0; b < lambda[a]; ++b) {
                index[{a, b}] = boxes.size();
                boxes.push_back({a, b});
            }
        AdhmDatum d = zero_adhm(k, 1);
        for (std::size_t n = 0; n < boxes.size(); ++n) {
            auto [a, b] = boxes[n];
            auto down = index.find({a + 1, b});
            if (down != index.end()) d.b1.at(down->second, n) = 1;
            auto right = index.find({a, b + 1});
            if (right != index.end()) d.b2.at(right->second, n) = 1;
        }
        if (k > 0) d.i.at(index.at({0, 0}), 0) = 1;
        out.push_back(std::move(d));
    }
    return out;
}

AdhmDatum adhm_from_points(const std::vector<std::pair<Scalar, Scalar>>& points) {
    AdhmDatum d = zero_adhm(points.size(), 1);
    for (std::size_t m = 0; m < points.size(); ++m) {
        d.b1.at(m, m) = points[m].first;
        d.b2.at(m, m) = points[m].second;
        d.i.at(m, 0) = 1;
    }
    return d;
}

AdhmDatum gl_action(const RationalMatrix& g, const AdhmDatum& d) {
    validate_adhm(d);
    if (g.rows() != d.k || g.cols() != d.k)
        throw std::invalid_argument("group element must be k x k");
    auto ginv = inverse(g);
    if (!ginv) throw std::invalid_argument("group element is singular");
    return AdhmDatum{d.k,          d.r,         g * d.b1 * *ginv, g * d.b2 * *ginv,
                     g * d.i,      d.j * *ginv};
}

TangentReport tangent_report(const AdhmDatum& d) {
    if (!check_equation(d)) throw std::runtime_error("ADHM equation fails");
    std::size_t k = d.k, r = d.r;
    std::size_t nvars = 2 * k * k + 2 * k * r;

    auto flatten_into = [&](const RationalMatrix& m, RationalMatrix& target, std::size_t col) {
        std::size_t idx = 0;
        for (std::size_t a = 0; a < m.rows(); ++a)
            for (std::size_t b = 0; b < m.cols(); ++b) target.at(idx++, col) = m.at(a, b);
    };

    // d(mu): (dB1, dB2, di, dj) -> [dB1,B2] + [B1,dB2] + di j + i dj
    RationalMatrix dmu(k * k, nvars);
    std::size_t col = 0;
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b) {
            RationalMatrix u(k, k);
            u.at(a, b) = 1;
            flatten_into(u * d.b2 - d.b2 * u, dmu, col++);
        }
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b) {
            RationalMatrix u(k, k);
            u.at(a, b) = 1;
            flatten_into(d.b1 * u - u * d.b1, dmu, col++);
        }
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < r; ++b) {
            RationalMatrix u(k, r);
            u.at(a, b) = 1;
            flatten_into(u * d.j, dmu, col++);
        }
    for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = 0; b < k; ++b) {
            RationalMatrix u(r, k);
            u.at(a, b) = 1;
            flatten_into(d.i * u, dmu, col++);
        }
    std::size_t rank_dmu = rank(dmu);

    // stabilizer: g in gl(k) with [g,B1] = [g,B2] = 0, g i = 0, j g = 0
    RationalMatrix stab(2 * k * k + 2 * k * r, k * k);
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b) {
            RationalMatrix u(k, k);
            u.at(a, b) = 1;
            std::size_t c = a * k + b;
            std::size_t idx = 0;
            auto put = [&](const RationalMatrix& m) {
                for (std::size_t x = 0; x < m.rows(); ++x)
                    for (std::size_t y = 0; y < m.cols(); ++y) stab.at(idx++, c) = m.at(x, y);
            };
            put(u * d.b1 - d.b1 * u);
            put(u * d.b2 - d.b2 * u);
            put(u * d.i);
            put(d.j * u);
        }
    std::size_t stab_dim = k * k - rank(stab);

    TangentReport rep;
    rep.rank_dmu = rank_dmu;
    rep.stabilizer_dim = stab_dim;
    rep.tangent_dim = static_cast<long>(nvars - rank_dmu) -
                      static_cast<long>(k * k - stab_dim);
    return rep;
}

AdhmDatum random_stable_adhm(SeededSampler& sampler, std::size_t k, std::size_t r) {
    for (;;) {
        AdhmDatum d = zero_adhm(k, r);
        for (std::size_t m = 0; m < k; ++m) {
            d.b1.at(m, m) = Scalar(static_cast<long>(m)) + make_scalar(sampler.next_int(0, 1), 2);
            d.b2.at(m, m) = sampler.next_scalar();
        }
        for (std::size_t m = 0; m < k; ++m)
            for (std::size_t a = 0; a < r; ++a) d.i.at(m, a) = sampler.next_nonzero_scalar();
        if (check_equation(d) && is_stable(d)) return d;
    }
}

AdhmDatum random_adhm(SeededSampler& sampler, std::size_t k, std::size_t r) {
    AdhmDatum d = zero_adhm(k, r);
    d.b1 = sampler.next_matrix(k, k);
    d.b2 = sampler.next_matrix(k, k);
    d.i = sampler.next_matrix(k, r);
    d.j = sampler.next_matrix(r, k);
    return d;
}

}  // namespace fsq
