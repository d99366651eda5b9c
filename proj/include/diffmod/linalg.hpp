#ifndef DIFFMOD_LINALG_HPP
#define DIFFMOD_LINALG_HPP

#include <optional>
#include <vector>

#include "diffmod/scalar.hpp"

namespace diffmod {

/// Incremental exact row reduction over the field Q(sqrt 21).
///
/// Rows are inserted one at a time and the stored set is kept in reduced
/// row-echelon form, so rank and nullspace queries are cheap at any point.
/// Insertion order does not affect the results.
class RowReducer {
public:
    explicit RowReducer(int cols) : cols_(cols) {}

    void add_row(std::vector<Scalar> row);

    int cols() const { return cols_; }
    int rank() const { return static_cast<int>(rows_.size()); }
    const std::vector<std::vector<Scalar>>& rows() const { return rows_; }
    const std::vector<int>& pivot_cols() const { return pivots_; }

    /// Basis of the solution space of (rows) x = 0, one vector per free
    /// column, in increasing free-column order.
    std::vector<std::vector<Scalar>> nullspace() const;

private:
    int cols_;
    std::vector<std::vector<Scalar>> rows_; // RREF, pivots_ strictly increasing
    std::vector<int> pivots_;
};

struct LinearSolution {
    /// Particular solution with all free variables set to zero; absent when
    /// the system is inconsistent.
    std::optional<std::vector<Scalar>> particular;
    int kernel_dim = 0;
};

/// Exact solve of A x = b.
LinearSolution solve_linear(const std::vector<std::vector<Scalar>>& a,
                            const std::vector<Scalar>& b);

} // namespace diffmod

#endif
