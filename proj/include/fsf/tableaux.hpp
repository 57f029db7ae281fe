#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "fsf/param_seq.hpp"
#include "fsf/partition.hpp"
#include "fsf/polynomial.hpp"
#include "fsf/superpoly.hpp"

namespace fsf {

/// Symbols of the ordered alphabet 1' < 1 < 2' < 2 < ... are coded as
/// 2k-1 for k' and 2k for k, so integer order is alphabet order.
inline int primed_symbol(int k) { return 2 * k - 1; }
inline int unprimed_symbol(int k) { return 2 * k; }
inline bool is_primed(int symbol) { return symbol % 2 != 0; }
inline int symbol_level(int symbol) { return (symbol + 1) / 2; }
std::string symbol_to_string(int symbol);

/// A filling of a skew shape; entries follow shape.cells() (row-major).
struct Filling {
  SkewShape shape;
  std::vector<int> entries;

  /// Throws std::out_of_range if the cell is not in the shape.
  int at(int row, int col) const;
  bool operator==(const Filling&) const = default;
  auto operator<=>(const Filling& o) const { return entries <=> o.entries; }
};

/// Entries in 1..n, weakly increasing along rows and columns and strictly
/// increasing along diagonals.
struct DiagonalStrictTableau : Filling {
  /// inner = chain[0] <= chain[1] <= ... <= chain[n] = outer, where chain[i]
  /// adds the cells holding i.
  std::vector<Partition> chain(int n) const;
  /// "1 2/2" style rows, inner cells shown as '.'.
  std::string to_string() const;
};

/// Entries are alphabet symbols (see primed_symbol); rows and columns weakly
/// increase, each k' appears at most once per row and each k at most once
/// per column.
struct PrimedTableau : Filling {
  /// Replaces k' by k.
  DiagonalStrictTableau unprimed() const;
  std::string to_string() const;
};

bool is_diagonal_strict(const DiagonalStrictTableau& t, int n);
bool is_primed_tableau(const PrimedTableau& t, int n);

/// f_{nu;a}(u, v) with u as variable 0 and v as variable 1: (u+v) per
/// connected component, (u - a'_{d-e}) per vertical interior side and
/// (v + a'_{d-e}) per horizontal interior side with midpoint (e, d), the
/// first coordinate pointing down. Throws std::invalid_argument if nu has a
/// 2x2 block.
Polynomial skew_hook_weight(const SkewShape& nu, const ParameterSequence& a);
Rational skew_hook_weight_at(const SkewShape& nu, const ParameterSequence& a, const Rational& u, const Rational& v);

/// Visits every diagonal-strict tableau of the shape with entries in 1..n,
/// built level by level from skew strips with no 2x2 block.
void for_each_diagonal_strict(const SkewShape& shape, int n,
                              const std::function<void(const DiagonalStrictTableau&)>& visit);
std::vector<DiagonalStrictTableau> enumerate_diagonal_strict(const SkewShape& shape, int n);

/// The primed tableaux that unprime to t: two choices per connected
/// component of each level set.
std::vector<PrimedTableau> primed_lifts(const DiagonalStrictTableau& t);
void for_each_primed(const SkewShape& shape, int n, const std::function<void(const PrimedTableau&)>& visit);
std::vector<PrimedTableau> enumerate_primed(const SkewShape& shape, int n);

std::uint64_t count_diagonal_strict(const SkewShape& shape, int n);
std::uint64_t count_primed(const SkewShape& shape, int n);

/// prod_i f_{T^{-1}(i);a}(x_i, y_i).
Rational tableau_weight(const DiagonalStrictTableau& t, const ParameterSequence& a, const EvalPoint& pt);
/// prod over k-cells of (x_k - a_c) times prod over k'-cells of (y_k + a_c),
/// c the content.
Rational tableau_weight(const PrimedTableau& t, const ParameterSequence& a, const EvalPoint& pt);

enum class CombinatorialRoute {
  level_strips,  // sum over diagonal-strict tableaux of products of f-weights
  primed_cells,  // sum over primed tableaux of products of cell factors
};

/// The combinatorial sum over tableaux with entries up to pt.n().
Rational combinatorial_sum(const SkewShape& shape, const ParameterSequence& a, const EvalPoint& pt,
                           CombinatorialRoute route);
/// Symbolic version in x_1..x_n, y_1..y_n. Throws std::invalid_argument
/// unless n <= 2 and |shape| <= 6.
SuperPolynomial combinatorial_sum(const SkewShape& shape, const ParameterSequence& a, int n,
                                  CombinatorialRoute route);

struct LatticePoint {
  int m;  // horizontal coordinate
  int k;  // height, 0..n
  auto operator<=>(const LatticePoint&) const = default;
};

/// One path per row i of the outer shape, from (inner_i - i, 0) to
/// (outer_i - i, n), with steps (1,0), (1,1), (0,1), never starting with a
/// horizontal step, pairwise vertex-disjoint.
struct PathCollection {
  std::vector<std::vector<LatticePoint>> paths;
  bool operator==(const PathCollection&) const = default;
};

void for_each_path_collection(const SkewShape& shape, int n, const std::function<void(const PathCollection&)>& visit);
std::vector<PathCollection> enumerate_paths(const SkewShape& shape, int n);

/// Horizontal step ending at (m, k): x_k - a_m; diagonal: y_k + a_m;
/// vertical: 1.
Rational path_weight(const PathCollection& paths, const ParameterSequence& a, const EvalPoint& pt);
/// Sum of path_weight over all collections.
Rational path_sum(const SkewShape& shape, const ParameterSequence& a, const EvalPoint& pt);

/// A horizontal step of path i ending at (m, k) fills cell (i, m+i) with k, a
/// diagonal one with k'. Throws std::invalid_argument if the steps do not
/// cover the shape.
PrimedTableau tableau_from_paths(const PathCollection& paths, const SkewShape& shape);
/// The inverse of tableau_from_paths. Throws std::invalid_argument if t is
/// not a primed tableau of order n.
PathCollection paths_from_tableau(const PrimedTableau& t, int n);

/// h_{0|n}, ..., h_{K|n}(x; y | a) at the point, by adding one pair of
/// variables at a time:
/// h_{k|n} = h_{k|n-1} + (x_n+y_n) sum_{r<k} h_{r|n-1} prod_{t=1}^{k-1-r} (x_n - a_{k-t}).
std::vector<Rational> h_by_branching(const ParameterSequence& a, const EvalPoint& pt, int max_k);
/// The same values from 1 + sum_k h_k / (u|a)^k = prod (u+y_i)/(u-x_i).
std::vector<Rational> h_by_series(const ParameterSequence& a, const EvalPoint& pt, int max_k);

/// det[h_{outer_i - inner_j + j - i | n}(x; y | tau^{inner_j - j + 1} a)] with
/// entries from h_by_branching.
Rational gessel_viennot_determinant(const SkewShape& shape, const ParameterSequence& a, const EvalPoint& pt);
/// The same determinant with entries from h_by_series.
Rational skew_determinant(const SkewShape& shape, const ParameterSequence& a, const EvalPoint& pt);

struct BijectionResult {
  std::uint64_t path_collections = 0;
  std::uint64_t tableaux = 0;
  bool ok = false;
  std::string problem;  // first failure, empty when ok
};

/// Maps every path collection to a tableau and checks the image is a valid
/// primed tableau, the map is injective and onto enumerate_primed, the
/// inverse map round-trips, and weights agree at pt under a.
BijectionResult check_path_bijection(const SkewShape& shape, int n, const ParameterSequence& a, const EvalPoint& pt);

}  // namespace fsf
