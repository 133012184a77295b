#pragma once

#include <optional>
#include <vector>

#include "fsq/rational.hpp"

namespace fsq {

// Dense matrix of exact rationals, row-major. 0xn and nx0 are legal.
class RationalMatrix {
public:
    RationalMatrix() : rows_(0), cols_(0) {}
    RationalMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols, Scalar(0)) {}
    RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries);

    static RationalMatrix identity(std::size_t n);
    static RationalMatrix from_longs(std::size_t rows, std::size_t cols,
                                     const std::vector<long>& vals);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Scalar& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
    Scalar& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const std::vector<Scalar>& entries() const { return entries_; }

    bool is_zero() const;
    bool operator==(const RationalMatrix& other) const = default;

    RationalMatrix transpose() const;
    RationalMatrix operator*(const RationalMatrix& rhs) const;
    RationalMatrix operator+(const RationalMatrix& rhs) const;
    RationalMatrix operator-(const RationalMatrix& rhs) const;
    RationalMatrix scaled(const Scalar& c) const;

    // Stacks blocks vertically / horizontally; column/row counts must agree.
    static RationalMatrix vstack(const std::vector<RationalMatrix>& blocks, std::size_t cols);
    static RationalMatrix hstack(const std::vector<RationalMatrix>& blocks, std::size_t rows);

private:
    std::size_t rows_, cols_;
    std::vector<Scalar> entries_;
};

std::size_t rank(const RationalMatrix& m);

// Exact basis of the right null space, as columns; count = cols - rank.
std::vector<std::vector<Scalar>> kernel_basis(const RationalMatrix& m);

// Some exact solution of m x = b, or nullopt when inconsistent.
std::optional<std::vector<Scalar>> solve(const RationalMatrix& m, const std::vector<Scalar>& b);

std::optional<RationalMatrix> inverse(const RationalMatrix& m);

// Bases are lists of ambient-dimension column vectors.
using Subspace = std::vector<std::vector<Scalar>>;
Subspace sum_subspaces(const Subspace& a, const Subspace& b, std::size_t ambient_dim);
Subspace intersect_subspaces(const Subspace& a, const Subspace& b, std::size_t ambient_dim);

RationalMatrix columns_to_matrix(const Subspace& cols, std::size_t ambient_dim);

}  // namespace fsq
