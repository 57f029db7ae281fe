#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "fsf/rational.hpp"

namespace fsf {

/// Sparse multivariate polynomial over Q in at most kMaxVars variables.
///
/// A monomial is packed into one 64-bit word, kBits per exponent, with
/// variable 0 in the most significant field so that comparing packed words
/// is lexicographic order on exponent vectors. Terms are kept sorted in
/// decreasing monomial order, so terms().front() is the leading term.
class Polynomial {
 public:
  using Monomial = std::uint64_t;
  using Term = std::pair<Monomial, Rational>;

  static constexpr int kMaxVars = 10;
  static constexpr int kBits = 6;
  static constexpr int kMaxExponent = (1 << kBits) - 1;

  Polynomial() = default;
  Polynomial(const Rational& c);
  Polynomial(int c) : Polynomial(Rational(c)) {}

  /// coeff * v.
  static Polynomial variable(int v, const Rational& coeff = 1);
  static Polynomial monomial(const std::vector<int>& exponents, const Rational& coeff = 1);
  /// Builds from unsorted, possibly repeated terms.
  static Polynomial from_terms(std::vector<Term> terms);

  static Monomial pack(const std::vector<int>& exponents);
  static int exponent(Monomial m, int v) {
    return static_cast<int>((m >> shift(v)) & static_cast<Monomial>(kMaxExponent));
  }
  static int total_degree(Monomial m);
  /// m1 * m2; throws std::overflow_error if an exponent exceeds kMaxExponent.
  static Monomial multiply(Monomial m1, Monomial m2);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  /// -1 for the zero polynomial.
  int total_degree() const;
  int degree_in(int v) const;
  Rational coefficient(Monomial m) const;
  /// Constant term.
  Rational constant() const { return coefficient(0); }

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }

  Polynomial pow(int k) const;

  /// values[v] is substituted for variable v; missing entries count as 0.
  Rational evaluate(const std::vector<Rational>& values) const;
  /// Replaces variable v by `value`.
  Polynomial substitute(int v, const Polynomial& value) const;
  /// Variable v becomes variable target[v]; target[v] < 0 sets it to zero.
  /// Variables beyond target.size() are kept in place.
  Polynomial remap(const std::vector<int>& target) const;

  /// Exact quotient by (v_i - v_k). Throws std::domain_error on a nonzero
  /// remainder.
  Polynomial divide_by_difference(int i, int k) const;

  /// Human-readable form using the given variable names.
  std::string to_string(const std::vector<std::string>& names) const;

 private:
  static int shift(int v) { return kBits * (kMaxVars - 1 - v); }
  static Monomial unit(int v) { return Monomial{1} << shift(v); }

  std::vector<Term> terms_;
};

inline bool is_zero(const Polynomial& p) { return p.is_zero(); }

/// Accumulates terms without keeping them sorted; convert once at the end.
class PolynomialAccumulator {
 public:
  void add(Polynomial::Monomial m, const Rational& c);
  void add(const Polynomial& p, const Rational& scale = 1);
  Polynomial take();

 private:
  std::vector<Polynomial::Term> pending_;
};

}  // namespace fsf
