#include "diffmod/linalg.hpp"

#include <algorithm>

#include "diffmod/errors.hpp"

namespace diffmod {

void RowReducer::add_row(std::vector<Scalar> row) {
    if (static_cast<int>(row.size()) != cols_)
        throw internal_error("row width mismatch");
    // reduce against existing pivots (copy: the pivot entry mutates below)
    for (std::size_t t = 0; t < rows_.size(); ++t) {
        const Scalar c = row[static_cast<std::size_t>(pivots_[t])];
        if (c.is_zero())
            continue;
        for (int j = 0; j < cols_; ++j)
            if (!rows_[t][static_cast<std::size_t>(j)].is_zero())
                row[static_cast<std::size_t>(j)] -= c * rows_[t][static_cast<std::size_t>(j)];
    }
    int p = -1;
    for (int j = 0; j < cols_; ++j)
        if (!row[static_cast<std::size_t>(j)].is_zero()) {
            p = j;
            break;
        }
    if (p < 0)
        return; // dependent row
    const Scalar inv = row[static_cast<std::size_t>(p)].inverse();
    for (int j = p; j < cols_; ++j)
        if (!row[static_cast<std::size_t>(j)].is_zero())
            row[static_cast<std::size_t>(j)] *= inv;
    // eliminate the new pivot from stored rows
    for (std::size_t t = 0; t < rows_.size(); ++t) {
        const Scalar c = rows_[t][static_cast<std::size_t>(p)];
        if (c.is_zero())
            continue;
        for (int j = 0; j < cols_; ++j)
            if (!row[static_cast<std::size_t>(j)].is_zero())
                rows_[t][static_cast<std::size_t>(j)] -= c * row[static_cast<std::size_t>(j)];
    }
    // insert keeping pivot columns increasing
    const auto it = std::upper_bound(pivots_.begin(), pivots_.end(), p);
    const auto idx = static_cast<std::size_t>(it - pivots_.begin());
    pivots_.insert(it, p);
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(idx), std::move(row));
}

std::vector<std::vector<Scalar>> RowReducer::nullspace() const {
    std::vector<bool> is_pivot(static_cast<std::size_t>(cols_), false);
    for (int p : pivots_)
        is_pivot[static_cast<std::size_t>(p)] = true;
    std::vector<std::vector<Scalar>> basis;
    for (int f = 0; f < cols_; ++f) {
        if (is_pivot[static_cast<std::size_t>(f)])
            continue;
        std::vector<Scalar> v(static_cast<std::size_t>(cols_));
        v[static_cast<std::size_t>(f)] = Scalar(1);
        for (std::size_t t = 0; t < rows_.size(); ++t)
            v[static_cast<std::size_t>(pivots_[t])] = -rows_[t][static_cast<std::size_t>(f)];
        basis.push_back(std::move(v));
    }
    return basis;
}

LinearSolution solve_linear(const std::vector<std::vector<Scalar>>& a,
                            const std::vector<Scalar>& b) {
    if (a.size() != b.size())
        throw internal_error("solve_linear shape mismatch");
    const int n = a.empty() ? 0 : static_cast<int>(a.front().size());
    RowReducer red(n + 1);
    for (std::size_t r = 0; r < a.size(); ++r) {
        std::vector<Scalar> row = a[r];
        row.push_back(b[r]);
        red.add_row(std::move(row));
    }
    LinearSolution out;
    int rank_a = 0;
    for (std::size_t t = 0; t < red.rows().size(); ++t) {
        if (red.pivot_cols()[t] == n)
            return out; // pivot in the augmented column: inconsistent
        ++rank_a;
    }
    out.kernel_dim = n - rank_a;
    std::vector<Scalar> x(static_cast<std::size_t>(n));
    for (std::size_t t = 0; t < red.rows().size(); ++t)
        x[static_cast<std::size_t>(red.pivot_cols()[t])] = red.rows()[t].back();
    out.particular = std::move(x);
    return out;
}

} // namespace diffmod
