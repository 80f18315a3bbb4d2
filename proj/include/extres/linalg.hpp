#pragma once

// Exact sparse linear algebra over Q and GF(p).

#include <cstddef>
#include <utility>
#include <vector>

#include "extres/field.hpp"

namespace extres::linalg {

// Sorted by index, no explicit zeros.
using SparseVector = std::vector<std::pair<std::size_t, Scalar>>;

// Column-major: columns[c] lists the nonzero entries (row, value) of column c.
struct SparseMatrix {
  std::size_t rows = 0;
  std::vector<SparseVector> columns;

  std::size_t cols() const noexcept { return columns.size(); }
};

// Sorts entries, merges duplicates and drops zeros (after reduction into field).
void canonicalize(SparseVector& v, const Field& field);

std::size_t rank(const SparseMatrix& m, const Field& field);

// For every right-hand side b finds some x with m * x = b. Free variables are
// set to zero. Throws InconsistentSystem when a right-hand side is not in the
// column span.
std::vector<SparseVector> solve(const SparseMatrix& m, const std::vector<SparseVector>& rhs,
                                const Field& field);

}  // namespace extres::linalg
