#pragma once

#include <vector>

#include "tripoints/gf.hpp"

namespace tripoints::linalg {

/// Rows of equal length over one field.
using Matrix = std::vector<std::vector<FieldElem>>;

/// In-place reduced row echelon form. Returns the pivot column of each
/// nonzero row, in row order. Pivot choice is the first nonzero entry in
/// column order, so the result is deterministic.
std::vector<int> rref(Matrix& m);

int rank(Matrix m);

/// Basis of {x : m x = 0} as vectors of length ncols, one per free column,
/// in ascending free-column order. Empty matrix means no constraints.
std::vector<std::vector<FieldElem>> kernel_basis(const Matrix& m, const Field& field,
                                                 int ncols);

}  // namespace tripoints::linalg
