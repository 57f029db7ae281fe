#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "fsf/partition.hpp"
#include "fsf/rational.hpp"
#include "fsf/series.hpp"

namespace fsf {

/// An element of the ring of symmetric functions, written as a polynomial in
/// the complete homogeneous generators h_1, h_2, ...
///
/// The term for partition lambda is the monomial h_{lambda_1} h_{lambda_2}...
/// Every element carries a truncation degree: terms above it are dropped and
/// products keep the smaller truncation of their operands. kExact means no
/// truncation. Degrees are limited to kMaxDegree by the key encoding.
class LambdaElement {
 public:
  using Key = std::uint64_t;
  using Term = std::pair<Key, Rational>;

  static constexpr int kExact = std::numeric_limits<int>::max();
  static constexpr int kMaxDegree = 24;

  LambdaElement() = default;
  LambdaElement(const Rational& c);
  LambdaElement(int c) : LambdaElement(Rational(c)) {}

  /// h_k; h_0 = 1 and h_k = 0 for k < 0.
  static LambdaElement h(int k);
  /// coeff * h_lambda.
  static LambdaElement h_monomial(const Partition& lambda, const Rational& coeff = 1);

  int trunc_degree() const { return trunc_; }
  bool is_exact() const { return trunc_ == kExact; }
  /// Copy with terms of degree > d removed and truncation min(d, current).
  LambdaElement truncated(int d) const;

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  /// Highest degree present; -1 for zero.
  int degree() const;
  LambdaElement homogeneous_component(int d) const;
  LambdaElement top_component() const { return homogeneous_component(degree()); }
  Rational coefficient(const Partition& lambda) const;
  Rational constant_term() const { return coefficient(Partition{}); }
  /// Terms keyed by partition.
  std::map<Partition, Rational, SizeThenReverseLex> terms() const;
  const std::vector<Term>& raw_terms() const { return terms_; }

  static Key encode(const Partition& lambda);
  static Partition decode(Key key);
  static int key_degree(Key key) { return static_cast<int>(key >> kDegreeShift); }

  LambdaElement operator-() const;
  LambdaElement& operator+=(const LambdaElement& o);
  LambdaElement& operator-=(const LambdaElement& o);
  LambdaElement& operator*=(const Rational& c);
  friend LambdaElement operator+(LambdaElement a, const LambdaElement& b) { return a += b; }
  friend LambdaElement operator-(LambdaElement a, const LambdaElement& b) { return a -= b; }
  friend LambdaElement operator*(const LambdaElement& a, const LambdaElement& b);
  friend LambdaElement operator*(LambdaElement a, const Rational& c) { return a *= c; }
  friend LambdaElement operator*(const Rational& c, LambdaElement a) { return a *= c; }

  /// Compares terms only; truncation degrees are not part of the value.
  bool operator==(const LambdaElement& o) const { return terms_ == o.terms_; }

  /// "h2*h1^2 - 1/2*h1 + 3".
  std::string to_string() const;

 private:
  static constexpr int kDegreeShift = 59;

  std::vector<Term> terms_;  // sorted by key, no zero coefficients
  int trunc_ = kExact;
};

inline bool is_zero(const LambdaElement& f) { return f.is_zero(); }

/// Coefficients in the Schur basis, ordered by size then reverse-lex.
using SchurExpansion = std::map<Partition, Rational, SizeThenReverseLex>;

LambdaElement h_gen(int k);
/// Elementary symmetric function in the h basis, from H(u)E(-u) = 1.
LambdaElement e_gen(int k);
/// Power sum from Newton's identities.
LambdaElement power_sum(int k);
/// Schur function by the Jacobi-Trudi determinant det[h_{mu_i - i + j}].
LambdaElement schur(const Partition& mu);

SchurExpansion expand_in_schur(const LambdaElement& f);
LambdaElement from_schur(const SchurExpansion& expansion);

/// The involution h_k <-> e_k.
LambdaElement omega(const LambdaElement& f);
/// The automorphism with T_r(H(u)) = H(u - r).
LambdaElement t_shift(const LambdaElement& f, const Rational& r);
/// T_r(h_k) read off the substituted generating series.
LambdaElement t_shift_h(int k, const Rational& r);
/// Character value: the coefficient of s_nu in p_rho. Throws
/// std::invalid_argument if |nu| != |rho|.
Integer char_value(const Partition& nu, const Partition& rho);

/// H(u) = 1 + sum h_k / u^k and E(u) = 1 + sum e_k / u^k up to order N.
TruncatedSeries<LambdaElement> H_series(int order);
TruncatedSeries<LambdaElement> E_series(int order);

/// Evaluates f given numeric values for h_1, h_2, ...: h_values[k] is the
/// value of h_k (h_values[0] is ignored and treated as 1).
Rational evaluate_h(const LambdaElement& f, const std::vector<Rational>& h_values);

}  // namespace fsf
