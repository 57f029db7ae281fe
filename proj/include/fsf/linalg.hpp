#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "fsf/rational.hpp"

namespace fsf {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Determinant by Gaussian elimination over Q.
Rational determinant(RationalMatrix m);

/// Inverse of a square matrix. Throws std::domain_error if singular.
RationalMatrix inverse(RationalMatrix m);

/// Solves A x = b where A has at least as many rows as columns. The system
/// must be consistent with a unique solution; otherwise std::domain_error
/// is thrown ("singular" or "inconsistent").
std::vector<Rational> solve_unique(RationalMatrix a, std::vector<Rational> b);

/// Determinant over a commutative ring without division.
///
/// Expands along rows, accumulating over the set of columns already used:
/// partial[S] is the signed sum over bijections from the first |S| rows to
/// S. This costs O(2^n n) ring multiplications, which is fine for the
/// sizes used here (n <= 10) and skips zero entries cheaply. T must provide
/// +, *, unary - and a free is_zero(const T&).
template <class T>
T ring_determinant(const std::vector<std::vector<T>>& m, const T& one) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return one;
  if (n > 20) throw std::length_error("ring_determinant: matrix too large");
  for (const auto& row : m)
    if (static_cast<int>(row.size()) != n) throw std::invalid_argument("ring_determinant: matrix is not square");
  const std::uint32_t full = (1u << n) - 1;
  std::vector<T> partial(std::size_t{1} << n);
  std::vector<char> live(std::size_t{1} << n, 0);
  partial[0] = one;
  live[0] = 1;
  for (std::uint32_t mask = 0; mask < full; ++mask) {
    if (!live[mask]) continue;
    const int row = std::popcount(mask);
    for (int c = 0; c < n; ++c) {
      if (mask & (1u << c)) continue;
      const T& entry = m[row][c];
      if (is_zero(entry)) continue;
      // Sign of placing column c after the columns in mask: one inversion
      // per already-used column to the right of c.
      const bool odd = std::popcount(mask >> (c + 1)) & 1;
      T term = partial[mask] * entry;
      const std::uint32_t next = mask | (1u << c);
      if (!live[next]) {
        partial[next] = odd ? -term : term;
        live[next] = 1;
      } else if (odd) {
        partial[next] = partial[next] - term;
      } else {
        partial[next] = partial[next] + term;
      }
    }
    // Row-by-row filling means this state is never read again.
    if (mask) partial[mask] = T{};
  }
  if (!live[full]) return one - one;
  return partial[full];
}

}  // namespace fsf
