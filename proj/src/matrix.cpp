#include "fsq/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace fsq {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_)
        throw std::invalid_argument("entry count does not match dimensions");
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::from_longs(std::size_t rows, std::size_t cols,
                                          const std::vector<long>& vals) {
    if (vals.size() != rows * cols) throw std::invalid_argument("entry count mismatch");
    RationalMatrix m(rows, cols);
    for (std::size_t i = 0; i < vals.size(); ++i) m.entries_[i] = Scalar(vals[i]);
    return m;
}

bool RationalMatrix::is_zero() const {
    for (const auto& e : entries_)
        if (e != 0) return false;
    return true;
}

RationalMatrix RationalMatrix::transpose() const {
    RationalMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("dimension mismatch in product");
    RationalMatrix out(rows_, rhs.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& v = at(r, k);
            if (v == 0) continue;
            for (std::size_t c = 0; c < rhs.cols_; ++c) out.at(r, c) += v * rhs.at(k, c);
        }
    return out;
}

RationalMatrix RationalMatrix::operator+(const RationalMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("shape mismatch");
    RationalMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i] + rhs.entries_[i];
    return out;
}

RationalMatrix RationalMatrix::operator-(const RationalMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("shape mismatch");
    RationalMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i] - rhs.entries_[i];
    return out;
}

RationalMatrix RationalMatrix::scaled(const Scalar& c) const {
    RationalMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i] * c;
    return out;
}

RationalMatrix RationalMatrix::vstack(const std::vector<RationalMatrix>& blocks, std::size_t cols) {
    std::size_t rows = 0;
    for (const auto& b : blocks) {
        if (b.cols() != cols) throw std::invalid_argument("vstack column mismatch");
        rows += b.rows();
    }
    RationalMatrix out(rows, cols);
    std::size_t r0 = 0;
    for (const auto& b : blocks) {
        for (std::size_t r = 0; r < b.rows(); ++r)
            for (std::size_t c = 0; c < cols; ++c) out.at(r0 + r, c) = b.at(r, c);
        r0 += b.rows();
    }
    return out;
}

RationalMatrix RationalMatrix::hstack(const std::vector<RationalMatrix>& blocks, std::size_t rows) {
    std::size_t cols = 0;
    for (const auto& b : blocks) {
        if (b.rows() != rows) throw std::invalid_argument("hstack row mismatch");
        cols += b.cols();
    }
    RationalMatrix out(rows, cols);
    std::size_t c0 = 0;
    for (const auto& b : blocks) {
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < b.cols(); ++c) out.at(r, c0 + c) = b.at(r, c);
        c0 += b.cols();
    }
    return out;
}

namespace {

// Row echelon form in place; returns pivot column per pivot row.
// Pivot choice within a column: largest numerator in absolute value,
// which keeps coefficient growth in check. Correctness is pivot-independent.
std::vector<std::size_t> echelonize(RationalMatrix& m) {
    std::vector<std::size_t> pivot_cols;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t best = m.rows();
        for (std::size_t r = row; r < m.rows(); ++r) {
            if (m.at(r, col) == 0) continue;
            if (best == m.rows() ||
                cmp(abs(m.at(r, col).get_num()), abs(m.at(best, col).get_num())) > 0)
                best = r;
        }
        if (best == m.rows()) continue;
        if (best != row)
            for (std::size_t c = col; c < m.cols(); ++c) std::swap(m.at(row, c), m.at(best, c));
        const Scalar pivot = m.at(row, col);
        for (std::size_t r = row + 1; r < m.rows(); ++r) {
            if (m.at(r, col) == 0) continue;
            Scalar f = m.at(r, col) / pivot;
            m.at(r, col) = 0;
            for (std::size_t c = col + 1; c < m.cols(); ++c) m.at(r, c) -= f * m.at(row, c);
        }
        pivot_cols.push_back(col);
        ++row;
    }
    return pivot_cols;
}

// Reduced row echelon form with unit pivots.
std::vector<std::size_t> rref(RationalMatrix& m) {
    auto pivots = echelonize(m);
    for (std::size_t i = pivots.size(); i-- > 0;) {
        std::size_t col = pivots[i];
        Scalar inv = 1 / m.at(i, col);
        for (std::size_t c = col; c < m.cols(); ++c) m.at(i, c) *= inv;
        for (std::size_t r = 0; r < i; ++r) {
            Scalar f = m.at(r, col);
            if (f == 0) continue;
            for (std::size_t c = col; c < m.cols(); ++c) m.at(r, c) -= f * m.at(i, c);
        }
    }
    return pivots;
}

}  // namespace

std::size_t rank(const RationalMatrix& m) {
    RationalMatrix work = m;
    return echelonize(work).size();
}

std::vector<std::vector<Scalar>> kernel_basis(const RationalMatrix& m) {
    RationalMatrix work = m;
    auto pivots = rref(work);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Scalar>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<Scalar> v(m.cols(), Scalar(0));
        v[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -work.at(i, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<Scalar>> solve(const RationalMatrix& m, const std::vector<Scalar>& b) {
    if (b.size() != m.rows()) throw std::invalid_argument("rhs length mismatch");
    RationalMatrix aug(m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, m.cols()) = b[r];
    }
    auto pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;  // inconsistent
    std::vector<Scalar> x(m.cols(), Scalar(0));
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug.at(i, m.cols());
    return x;
}

std::optional<RationalMatrix> inverse(const RationalMatrix& m) {
    if (m.rows() != m.cols()) return std::nullopt;
    std::size_t n = m.rows();
    RationalMatrix aug(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, n + r) = 1;
    }
    auto pivots = rref(aug);
    if (pivots.size() != n || pivots.back() >= n) return std::nullopt;
    RationalMatrix inv(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) inv.at(r, c) = aug.at(r, n + c);
    return inv;
}

RationalMatrix columns_to_matrix(const Subspace& cols, std::size_t ambient_dim) {
    RationalMatrix m(ambient_dim, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        if (cols[c].size() != ambient_dim) throw std::invalid_argument("ambient dimension mismatch");
        for (std::size_t r = 0; r < ambient_dim; ++r) m.at(r, c) = cols[c][r];
    }
    return m;
}

namespace {

// Column space basis: rref of the transpose, nonzero rows back as columns.
Subspace column_space_basis(const RationalMatrix& m) {
    RationalMatrix t = m.transpose();
    auto pivots = rref(t);
    Subspace basis;
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        std::vector<Scalar> v(m.rows());
        for (std::size_t c = 0; c < m.rows(); ++c) v[c] = t.at(i, c);
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace

Subspace sum_subspaces(const Subspace& a, const Subspace& b, std::size_t ambient_dim) {
    Subspace all = a;
    all.insert(all.end(), b.begin(), b.end());
    return column_space_basis(columns_to_matrix(all, ambient_dim));
}

Subspace intersect_subspaces(const Subspace& a, const Subspace& b, std::size_t ambient_dim) {
    if (a.empty() || b.empty()) return {};
    // Kernel of [A | -B]: the A-part of each kernel vector spans the intersection.
    RationalMatrix A = columns_to_matrix(a, ambient_dim);
    RationalMatrix B = columns_to_matrix(b, ambient_dim);
    RationalMatrix joint = RationalMatrix::hstack({A, B.scaled(Scalar(-1))}, ambient_dim);
    Subspace inter;
    for (const auto& k : kernel_basis(joint)) {
        std::vector<Scalar> v(ambient_dim, Scalar(0));
        for (std::size_t c = 0; c < a.size(); ++c)
            for (std::size_t r = 0; r < ambient_dim; ++r) v[r] += A.at(r, c) * k[c];
        inter.push_back(std::move(v));
    }
    // The kernel may overcount when a or b are dependent; reduce to a basis.
    return column_space_basis(columns_to_matrix(inter, ambient_dim));
}

}  // namespace fsq
