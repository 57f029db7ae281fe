#pragma once

#include <string>
#include <vector>

#include "fsf/lambda.hpp"
#include "fsf/param_seq.hpp"
#include "fsf/partition.hpp"
#include "fsf/polynomial.hpp"

namespace fsf {

/// A polynomial in x_1..x_n, y_1..y_n. x_i is polynomial variable i-1 and
/// y_i is variable n+i-1, so n is at most Polynomial::kMaxVars / 2.
class SuperPolynomial {
 public:
  static constexpr int kMaxN = Polynomial::kMaxVars / 2;

  SuperPolynomial() = default;
  SuperPolynomial(int n, Polynomial poly);

  static int x_var(int /*n*/, int i) { return i - 1; }
  static int y_var(int n, int i) { return n + i - 1; }
  static SuperPolynomial x(int n, int i);
  static SuperPolynomial y(int n, int i);

  int n() const { return n_; }
  const Polynomial& poly() const { return poly_; }
  bool is_zero() const { return poly_.is_zero(); }

  SuperPolynomial& operator+=(const SuperPolynomial& o);
  SuperPolynomial& operator-=(const SuperPolynomial& o);
  friend SuperPolynomial operator+(SuperPolynomial a, const SuperPolynomial& b) { return a += b; }
  friend SuperPolynomial operator-(SuperPolynomial a, const SuperPolynomial& b) { return a -= b; }
  friend SuperPolynomial operator*(const SuperPolynomial& a, const SuperPolynomial& b);
  bool operator==(const SuperPolynomial& o) const = default;

  /// "x1^2*y1 - 1/2*x2".
  std::string to_string() const;

 private:
  void check_same(const SuperPolynomial& o) const;

  int n_ = 0;
  Polynomial poly_;
};

/// A numeric point (x_1..x_n; y_1..y_n).
struct EvalPoint {
  std::vector<Rational> x;
  std::vector<Rational> y;

  EvalPoint() = default;
  /// Throws std::invalid_argument if the lengths differ.
  EvalPoint(std::vector<Rational> x_coords, std::vector<Rational> y_coords);
  int n() const { return static_cast<int>(x.size()); }
  /// Parses "x=1/2,3;y=0,-1". Throws std::invalid_argument.
  static EvalPoint parse(std::string_view text);
};

/// The image of f under h_k -> coefficient of u^{-k} in
/// prod_i (1 + y_i/u) / (1 - x_i/u). A ring homomorphism.
SuperPolynomial specialize(const LambdaElement& f, int n);

/// Numeric values h_0..h_K of the same specialization at a point.
std::vector<Rational> super_h_values(const EvalPoint& pt, int max_degree);

Rational eval(const LambdaElement& f, const EvalPoint& pt);
/// Coordinates missing from the point count as zero. Throws
/// std::invalid_argument if the point has a nonzero coordinate beyond f's
/// variables.
Rational eval(const SuperPolynomial& f, const EvalPoint& pt);

/// x_i = a_{P_i + 1}, y_i = dual(a)_{Q_i + 1} for i <= d(lambda), zero
/// beyond. Throws std::invalid_argument if n < d(lambda).
EvalPoint diagram_point(const Partition& lambda, const ParameterSequence& a, int n);

/// Separate symmetry in the x's and the y's plus independence of t after
/// x_1 = t, y_1 = -t.
bool is_supersymmetric(const SuperPolynomial& f);
/// Sets x_n = y_n = 0, giving a polynomial in n-1 pairs of variables.
SuperPolynomial restrict_last(const SuperPolynomial& f);

enum class Antisymmetrizer {
  literal,   // sum over all (n!)^2 pairs of permutations, then divide
  factored,  // antisymmetrize and divide in x, then in y
};

/// The alternating-sum formula for s_{mu;a}(x_1..x_n; y_1..y_n), divided by
/// V(x)V(y). Throws std::invalid_argument if n < d(mu) or n > kMaxN and
/// std::domain_error if a Vandermonde division leaves a remainder.
SuperPolynomial sergeev_pragacz(const Partition& mu, const ParameterSequence& a, int n,
                                Antisymmetrizer mode = Antisymmetrizer::literal);

/// The factorized form of s_{mu;a} in d(mu) pairs of variables:
/// det[(x_i|a)^{p_j}]/V(x) * det[(y_i|dual a)^{q_j}]/V(y) * prod (x_i + y_j).
SuperPolynomial berele_regev_factor(const Partition& mu, const ParameterSequence& a);

enum class SpecialValueRoute {
  cell_product,        // prod over cells of (a_{mu_i-i+1} - a_{j-mu'_j})
  frobenius_quotient,  // the product/quotient over Frobenius coordinates
};

struct SpecialValue {
  Rational value;
  SpecialValueRoute route;  // the route that produced value
  bool fell_back = false;   // frobenius_quotient had a zero denominator
};

/// s_{mu;a}(x(mu); y(mu)) in closed form.
SpecialValue special_value(const Partition& mu, const ParameterSequence& a, SpecialValueRoute route);

/// True when s_{mu;a} vanishes at the diagram point of lambda.
bool vanishing_check(const Partition& mu, const Partition& lambda, const ParameterSequence& a);

/// Recovers s_{mu;a} as the element s_mu + (lower degree terms) vanishing at
/// the diagram points of every lambda != mu with |lambda| <= |mu|. Throws
/// std::domain_error if the interpolation system is singular.
LambdaElement interpolation_solve(const Partition& mu, const ParameterSequence& a);

}  // namespace fsf
