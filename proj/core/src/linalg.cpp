#include "weylfaces/linalg.hpp"

#include <cstddef>

namespace weylfaces {

namespace {

// Row echelon form in place; returns pivot columns.
std::vector<std::size_t> echelonize(RatMatrix& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t piv = row;
    while (piv < m.size() && m[piv][col] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[row], m[piv]);
    const Rat inv = 1 / m[row][col];
    for (std::size_t c = col; c < cols; ++c) m[row][c] *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      const Rat f = m[r][col];
      for (std::size_t c = col; c < cols; ++c) m[r][c] -= f * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

int rank_of(RatMatrix m) {
  if (m.empty()) return 0;
  return static_cast<int>(echelonize(m, m[0].size()).size());
}

Rat det(RatMatrix m) {
  const std::size_t n = m.size();
  Rat result = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) return Rat(0);
    if (piv != col) {
      std::swap(m[piv], m[col]);
      result = -result;
    }
    result *= m[col][col];
    const Rat inv = 1 / m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      const Rat f = m[r][col] * inv;
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return result;
}

std::vector<RatVec> kernel_basis(const RatMatrix& m, std::size_t cols) {
  RatMatrix red = m;
  if (red.empty()) {
    // Zero map: the whole space.
    std::vector<RatVec> basis;
    for (std::size_t i = 0; i < cols; ++i) {
      RatVec e = zero_vec(cols);
      e[i] = 1;
      basis.push_back(std::move(e));
    }
    return basis;
  }
  const std::vector<std::size_t> pivots = echelonize(red, cols);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  std::vector<RatVec> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RatVec v = zero_vec(cols);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -red[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

bool leading_minors_positive(const RatMatrix& sym) {
  const std::size_t n = sym.size();
  for (std::size_t k = 1; k <= n; ++k) {
    RatMatrix block(k, RatVec(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) block[i][j] = sym[i][j];
    if (det(std::move(block)) <= 0) return false;
  }
  return true;
}

int affine_rank(const std::vector<RatVec>& points) {
  if (points.size() <= 1) return 0;
  RatMatrix diffs;
  diffs.reserve(points.size() - 1);
  for (std::size_t i = 1; i < points.size(); ++i) {
    RatVec d = points[i];
    for (std::size_t c = 0; c < d.size(); ++c) d[c] -= points[0][c];
    diffs.push_back(std::move(d));
  }
  return rank_of(std::move(diffs));
}

}  // namespace weylfaces
