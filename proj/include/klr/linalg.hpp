#ifndef KLR_LINALG_HPP
#define KLR_LINALG_HPP

#include <optional>
#include <vector>

#include "klr/qring.hpp"

namespace klr {

using RatMatrix = std::vector<std::vector<RatFn>>;
using RatVector = std::vector<RatFn>;

// Solves A x = b exactly over Q(q) by Gaussian elimination. Returns the
// pivot-variable solution (free variables set to zero), or nullopt when the
// system is inconsistent.
inline std::optional<RatVector> solve_linear(RatMatrix a, RatVector b) {
  size_t rows = a.size();
  size_t cols = rows ? a[0].size() : 0;
  std::vector<int> pivot_col_of_row;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t piv = r;
    while (piv < rows && a[piv][c].is_zero()) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    std::swap(b[piv], b[r]);
    RatFn inv = RatFn(1) / a[r][c];
    for (size_t j = c; j < cols; ++j) a[r][j] *= inv;
    b[r] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      RatFn f = a[i][c];
      for (size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
      b[i] -= f * b[r];
    }
    pivot_col_of_row.push_back(static_cast<int>(c));
    ++r;
  }
  for (size_t i = r; i < rows; ++i)
    if (!b[i].is_zero()) return std::nullopt;
  RatVector x(cols, RatFn(0));
  for (size_t i = 0; i < pivot_col_of_row.size(); ++i)
    x[pivot_col_of_row[i]] = b[i];
  return x;
}

}  // namespace klr

#endif
