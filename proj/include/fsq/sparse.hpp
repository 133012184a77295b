#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "fsq/rational.hpp"

namespace fsq {

// Sparse matrix over the rationals, for exact rank of the large Cech
// differentials. Rows are kept as ordered column->value maps.
class SparseMatrix {
public:
    SparseMatrix(std::size_t nrows, std::size_t ncols) : ncols_(ncols), rows_(nrows) {}

    std::size_t nrows() const { return rows_.size(); }
    std::size_t ncols() const { return ncols_; }

    void add(std::size_t row, std::size_t col, const Scalar& value);

    // Destructive exact rank by Markowitz-style elimination (pivots chosen
    // to minimize fill, preferring unit entries).
    std::size_t rank() &&;

private:
    std::size_t ncols_;
    std::vector<std::map<std::size_t, Scalar>> rows_;
};

}  // namespace fsq
