#pragma once

// Small dense linear algebra over a field: row reduction and kernels.

#include <cstddef>
#include <optional>
#include <vector>

#include "holocert/exactfield/field.hpp"

namespace holocert {

template <class K>
using Matrix = std::vector<std::vector<K>>;

// Reduced row echelon form in place; returns pivot columns.
template <class K>
std::vector<std::size_t> row_reduce(Matrix<K>& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  std::size_t rows = m.size(), cols = m[0].size(), r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && is_zero(m[piv][c])) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    K inv = inverse(m[r][c]);
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || is_zero(m[i][c])) continue;
      K t = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= t * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

// One nonzero kernel vector of m (rows x cols), if the kernel is nontrivial.
// The free variable chosen is the last non-pivot column.
template <class K, class F>
std::optional<std::vector<K>> kernel_vector(Matrix<K> m, std::size_t cols, const F& field) {
  std::vector<std::size_t> pivots = row_reduce(m);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::size_t free_col = cols;
  for (std::size_t c = cols; c-- > 0;) {
    if (!is_pivot[c]) {
      free_col = c;
      break;
    }
  }
  if (free_col == cols) return std::nullopt;
  std::vector<K> v(cols, field.zero());
  v[free_col] = field.one();
  for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][free_col];
  return v;
}

}  // namespace holocert
