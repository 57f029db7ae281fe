#pragma once

#include <string>
#include <string_view>

#include <gmpxx.h>

namespace fsf {

using Integer = mpz_class;

/// Exact rational number; every quantity in the library is one of these.
/// Unlike mpq_class, construction from a numerator and denominator always
/// yields the canonical (reduced, positive denominator) form, so equality
/// comparisons are reliable.
class Rational : public mpq_class {
 public:
  using mpq_class::mpq_class;
  using mpq_class::operator=;

  Rational() = default;
  Rational(const Rational&) = default;
  Rational(Rational&&) = default;
  Rational& operator=(const Rational&) = default;
  Rational& operator=(Rational&&) = default;
  Rational(const mpq_class& q) : mpq_class(q) {}
  Rational(long num, long den) : mpq_class(num, den) { canonicalize(); }
  Rational(const Integer& num, const Integer& den) : mpq_class(num, den) { canonicalize(); }
};

/// Canonical "p/q" (or "p" when the denominator is 1).
std::string to_string(const Rational& r);

/// Parses "p", "-p", "p/q". Throws std::invalid_argument on malformed input
/// or a zero denominator.
Rational parse_rational(std::string_view text);

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

/// r^k for k >= 0.
Rational power(const Rational& r, int k);

}  // namespace fsf
