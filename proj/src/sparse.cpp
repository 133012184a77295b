#include "fsq/sparse.hpp"

#include <limits>
#include <set>

namespace fsq {

void SparseMatrix::add(std::size_t row, std::size_t col, const Scalar& value) {
    if (value == 0) return;
    auto& r = rows_[row];
    auto it = r.find(col);
    if (it == r.end()) {
        r.emplace(col, value);
    } else {
        it->second += value;
        if (it->second == 0) r.erase(it);
    }
}

std::size_t SparseMatrix::rank() && {
    std::vector<std::set<std::size_t>> col_rows(ncols_);
    for (std::size_t r = 0; r < rows_.size(); ++r)
        for (const auto& [c, v] : rows_[r]) col_rows[c].insert(r);

    std::vector<char> col_done(ncols_, 0);
    std::size_t rank = 0;
    while (true) {
        // pivot column: fewest active rows
        std::size_t pc = ncols_;
        std::size_t best = std::numeric_limits<std::size_t>::max();
        for (std::size_t c = 0; c < ncols_; ++c) {
            if (col_done[c] || col_rows[c].empty()) continue;
            if (col_rows[c].size() < best) {
                best = col_rows[c].size();
                pc = c;
                if (best == 1) break;
            }
        }
        if (pc == ncols_) break;

        // pivot row: prefer unit entries, then short rows
        std::size_t pr = *col_rows[pc].begin();
        std::size_t best_len = std::numeric_limits<std::size_t>::max();
        bool best_unit = false;
        for (std::size_t r : col_rows[pc]) {
            const Scalar& v = rows_[r].at(pc);
            bool unit = (v == 1 || v == -1);
            std::size_t len = rows_[r].size();
            if ((unit && !best_unit) || (unit == best_unit && len < best_len)) {
                best_unit = unit;
                best_len = len;
                pr = r;
            }
        }

        const Scalar pivot = rows_[pr].at(pc);
        std::vector<std::size_t> targets(col_rows[pc].begin(), col_rows[pc].end());
        for (std::size_t r : targets) {
            if (r == pr) continue;
            Scalar factor = rows_[r].at(pc) / pivot;
            for (const auto& [c, v] : rows_[pr]) {
                auto& row = rows_[r];
                auto it = row.find(c);
                if (it == row.end()) {
                    row.emplace(c, -factor * v);
                    col_rows[c].insert(r);
                } else {
                    it->second -= factor * v;
                    if (it->second == 0) {
                        row.erase(it);
                        col_rows[c].erase(r);
                    }
                }
            }
        }
        for (const auto& [c, v] : rows_[pr]) col_rows[c].erase(pr);
        rows_[pr].clear();
        col_done[pc] = 1;
        ++rank;
    }
    return rank;
}

}  // namespace fsq
