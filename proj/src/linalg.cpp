#include "fsf/linalg.hpp"

#include <utility>

namespace fsf {

Rational determinant(RationalMatrix m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && is_zero(m[pivot][col])) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (is_zero(m[r][col])) continue;
      const Rational factor = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= factor * m[col][c];
    }
  }
  return det;
}

RationalMatrix inverse(RationalMatrix m) {
  const std::size_t n = m.size();
  RationalMatrix inv(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && is_zero(m[pivot][col])) ++pivot;
    if (pivot == n) throw std::domain_error("inverse: singular matrix");
    std::swap(m[pivot], m[col]);
    std::swap(inv[pivot], inv[col]);
    const Rational scale = 1 / m[col][col];
    for (std::size_t c = 0; c < n; ++c) {
      m[col][c] *= scale;
      inv[col][c] *= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || is_zero(m[r][col])) continue;
      const Rational factor = m[r][col];
      for (std::size_t c = 0; c < n; ++c) {
        m[r][c] -= factor * m[col][c];
        inv[r][c] -= factor * inv[col][c];
      }
    }
  }
  return inv;
}

std::vector<Rational> solve_unique(RationalMatrix a, std::vector<Rational> b) {
  const std::size_t rows = a.size();
  if (b.size() != rows) throw std::invalid_argument("solve_unique: dimension mismatch");
  const std::size_t cols = rows ? a[0].size() : 0;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && is_zero(a[pivot][col])) ++pivot;
    if (pivot == rows) throw std::domain_error("solve_unique: singular system");
    std::swap(a[pivot], a[rank]);
    std::swap(b[pivot], b[rank]);
    const Rational scale = 1 / a[rank][col];
    for (std::size_t c = col; c < cols; ++c) a[rank][c] *= scale;
    b[rank] *= scale;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || is_zero(a[r][col])) continue;
      const Rational factor = a[r][col];
      for (std::size_t c = col; c < cols; ++c) a[r][c] -= factor * a[rank][c];
      b[r] -= factor * b[rank];
    }
    ++rank;
  }
  for (std::size_t r = rank; r < rows; ++r)
    if (!is_zero(b[r])) throw std::domain_error("solve_unique: inconsistent system");
  b.resize(cols);
  return b;
}

}  // namespace fsf
