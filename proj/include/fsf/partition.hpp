#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "fsf/rational.hpp"

namespace fsf {

/// A Young diagram stored as its nonzero row lengths, weakly decreasing.
///
/// Row and column indices are 1-based throughout, matching the usual
/// (i, j) cell notation; `row(i)` returns 0 for i > length().
class Partition {
 public:
  Partition() = default;

  /// Trailing zeros are dropped. Throws std::invalid_argument if the input
  /// is negative or not weakly decreasing.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// "4,2,2"; "" and "0" give the empty diagram.
  static Partition parse(std::string_view text);
  std::string to_string() const;

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const;
  bool empty() const { return parts_.empty(); }

  int row(int i) const { return i >= 1 && i <= length() ? parts_[i - 1] : 0; }
  /// Column length mu'_j.
  int column(int j) const;
  /// Number of diagonal cells d(mu).
  int depth() const;
  bool has_cell(int i, int j) const { return i >= 1 && j >= 1 && j <= row(i); }

  Partition conjugate() const;

  auto operator<=>(const Partition&) const = default;
  bool operator==(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

/// Orders partitions by size descending, then reverse-lexicographically
/// ([2,1] < [2] < [1,1] < [1] < []).
struct SizeThenReverseLex {
  bool operator()(const Partition& a, const Partition& b) const;
};

struct FrobeniusCoords {
  std::vector<int> p;
  std::vector<int> q;
  int depth() const { return static_cast<int>(p.size()); }
  bool operator==(const FrobeniusCoords&) const = default;
};

FrobeniusCoords frobenius(const Partition& mu);
/// Throws std::invalid_argument unless p and q are strictly decreasing,
/// nonnegative and of equal length.
Partition from_frobenius(const FrobeniusCoords& c);

/// mu is a subdiagram of nu.
bool contains(const Partition& mu, const Partition& nu);

struct Cell {
  int row;
  int col;
  auto operator<=>(const Cell&) const = default;
  bool operator==(const Cell&) const = default;
};

/// The cells of outer/inner. Throws std::invalid_argument if inner is not
/// contained in outer.
class SkewShape {
 public:
  SkewShape() = default;
  SkewShape(Partition outer, Partition inner = {});

  /// "4,2,2/1,1" or a plain partition "4,2,2".
  static SkewShape parse(std::string_view text);
  std::string to_string() const;

  const Partition& outer() const { return outer_; }
  const Partition& inner() const { return inner_; }
  int size() const { return outer_.size() - inner_.size(); }
  bool has_cell(int i, int j) const { return outer_.has_cell(i, j) && !inner_.has_cell(i, j); }
  /// Row-major order.
  std::vector<Cell> cells() const;
  SkewShape conjugate() const { return {outer_.conjugate(), inner_.conjugate()}; }
  /// True when some 2x2 block of cells lies in the shape.
  bool has_2x2_block() const;
  /// Number of edge-connected components.
  int components() const;

  bool operator==(const SkewShape&) const = default;

 private:
  Partition outer_;
  Partition inner_;
};

int hook_length(const Partition& mu, int i, int j);
std::map<Cell, int> hook_lengths(const Partition& mu);
inline int content(const Cell& c) { return c.col - c.row; }
std::map<Cell, int> contents(const SkewShape& shape);

enum class DimMethod { brute, hook, determinant };
enum class SkewDimMethod { brute, determinant };

/// Largest |nu| - |mu| the chain enumerators accept.
inline constexpr int kBruteForceCap = 12;

/// Number of standard tableaux of shape nu.
Integer dim(const Partition& nu, DimMethod method);
/// Number of standard tableaux of nu/mu; 0 unless mu is contained in nu.
Integer dim_skew(const Partition& mu, const Partition& nu, SkewDimMethod method);

/// Partitions of n in reverse-lexicographic order ([n], [n-1,1], ...).
std::vector<Partition> partitions_of(int n);
/// All partitions with size <= n, grouped by size ascending.
std::vector<Partition> partitions_up_to(int n);
/// Partitions whose diagram fits inside a rows x cols box.
std::vector<Partition> partitions_in_box(int rows, int cols);

Rational factorial(int k);

}  // namespace fsf
