#include "tripoints/linalg.hpp"

#include <stdexcept>

namespace tripoints::linalg {

std::vector<int> rref(Matrix& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  const size_t ncols = m[0].size();
  for (const auto& row : m) {
    if (row.size() != ncols) throw std::invalid_argument("ragged matrix");
  }

  size_t r = 0;
  for (size_t c = 0; c < ncols && r < m.size(); ++c) {
    size_t sel = r;
    while (sel < m.size() && m[sel][c].is_zero()) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[r], m[sel]);

    FieldElem inv = m[r][c].inv();
    for (size_t j = c; j < ncols; ++j) m[r][j] = m[r][j] * inv;
    for (size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      FieldElem f = m[i][c];
      for (size_t j = c; j < ncols; ++j) m[i][j] = m[i][j] - f * m[r][j];
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  return pivots;
}

int rank(Matrix m) { return static_cast<int>(rref(m).size()); }

std::vector<std::vector<FieldElem>> kernel_basis(const Matrix& m, const Field& field,
                                                 int ncols) {
  Matrix red = m;
  std::vector<int> pivots = rref(red);

  std::vector<bool> is_pivot(ncols, false);
  for (int c : pivots) is_pivot[c] = true;

  std::vector<std::vector<FieldElem>> basis;
  for (int freec = 0; freec < ncols; ++freec) {
    if (is_pivot[freec]) continue;
    std::vector<FieldElem> v(ncols, field.zero());
    v[freec] = field.one();
    for (size_t i = 0; i < pivots.size(); ++i) {
      v[pivots[i]] = -red[i][freec];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace tripoints::linalg
