#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fsf/polynomial.hpp"
#include "fsf/rational.hpp"

namespace fsf {

/// A doubly infinite sequence (a_i), i in Z, of rationals.
///
/// Closed forms (zero, i - 1/2, alpha*i + beta) are defined everywhere; a
/// table holds values on the window [base, base + size) and throws
/// std::out_of_range when read outside it.
class ParameterSequence {
 public:
  enum class Form { zero, fs, affine, table };

  ParameterSequence() = default;

  static ParameterSequence zero() { return {}; }
  /// a_i = i - 1/2.
  static ParameterSequence fs();
  static ParameterSequence affine(const Rational& alpha, const Rational& beta);
  static ParameterSequence table(int base, std::vector<Rational> values);
  /// A table on [lo, hi] of pairwise distinct rationals drawn from a
  /// seeded generator; the same seed always gives the same sequence.
  static ParameterSequence seeded_table(std::uint64_t seed, int lo = -16, int hi = 16);

  /// "zero" | "fs" | "affine:<alpha>:<beta>" | "table:<base>:<v0,v1,...>".
  static ParameterSequence parse(std::string_view text);
  /// Inverse of parse.
  std::string to_string() const;

  Form form() const { return form_; }
  const Rational& alpha() const { return alpha_; }
  const Rational& beta() const { return beta_; }
  int base() const { return base_; }
  const std::vector<Rational>& values() const { return values_; }
  /// Index range [first, last] on which the sequence is defined; nullopt
  /// for closed forms.
  std::optional<std::pair<int, int>> window() const;
  bool defined_at(int i) const;

  Rational value_at(int i) const;
  Rational operator[](int i) const { return value_at(i); }

  /// The dual sequence with entries -a_{1-i}.
  ParameterSequence dual() const;
  /// The shifted sequence with entries a_{i+r}.
  ParameterSequence shift(int r) const;
  /// a'_eps = a_{eps + 1/2} for half-integer eps. Throws
  /// std::invalid_argument otherwise.
  Rational primed(const Rational& eps) const;

  /// Structural equality of the representation.
  bool operator==(const ParameterSequence&) const = default;

 private:
  Form form_ = Form::zero;
  Rational alpha_;
  Rational beta_;
  int base_ = 0;
  std::vector<Rational> values_;
};

/// a and b agree at every index in [lo, hi].
bool pointwise_equal(const ParameterSequence& a, const ParameterSequence& b, int lo, int hi);

/// (v - a_1)(v - a_2)...(v - a_k) as a polynomial in variable `var`; the
/// empty product for k = 0 is 1.
Polynomial factorial_power(const ParameterSequence& a, int k, int var = 0);
/// Value of (x | a)^k.
Rational factorial_power_at(const ParameterSequence& a, int k, const Rational& x);

}  // namespace fsf
