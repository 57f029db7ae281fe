#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "fsf/rational.hpp"

namespace fsf {

/// c_0 + c_1 w + ... + c_N w^N, where w = 1/u in every use in this library.
///
/// C is Rational or another commutative Q-algebra element type supporting
/// +, -, *, scalar multiplication by Rational, and construction from a
/// Rational. Binary operations truncate at the smaller order.
template <class C>
class TruncatedSeries {
 public:
  TruncatedSeries() = default;
  explicit TruncatedSeries(int order) : coeffs_(order + 1) {
    if (order < 0) throw std::invalid_argument("series order must be nonnegative");
  }
  TruncatedSeries(int order, std::vector<C> coeffs) : coeffs_(std::move(coeffs)) {
    if (order < 0) throw std::invalid_argument("series order must be nonnegative");
    coeffs_.resize(order + 1);
  }

  /// The constant series c.
  static TruncatedSeries constant(int order, const C& c) {
    TruncatedSeries s(order);
    s.coeffs_[0] = c;
    return s;
  }
  /// w itself.
  static TruncatedSeries w(int order) {
    TruncatedSeries s(order);
    if (order >= 1) s.coeffs_[1] = C(Rational(1));
    return s;
  }
  /// 1 / (1 - c w) = sum_m c^m w^m.
  static TruncatedSeries geometric(int order, const Rational& c) {
    TruncatedSeries s(order);
    Rational p = 1;
    for (int m = 0; m <= order; ++m, p *= c) s.coeffs_[m] = C(p);
    return s;
  }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const C& operator[](int k) const { return coeffs_.at(k); }
  C& operator[](int k) { return coeffs_.at(k); }
  const std::vector<C>& coefficients() const { return coeffs_; }

  TruncatedSeries truncated(int order) const {
    TruncatedSeries s(order);
    for (int k = 0; k <= std::min(order, this->order()); ++k) s.coeffs_[k] = coeffs_[k];
    return s;
  }

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int n = std::min(a.order(), b.order());
    TruncatedSeries s(n);
    for (int k = 0; k <= n; ++k) s.coeffs_[k] = a.coeffs_[k] + b.coeffs_[k];
    return s;
  }
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int n = std::min(a.order(), b.order());
    TruncatedSeries s(n);
    for (int k = 0; k <= n; ++k) s.coeffs_[k] = a.coeffs_[k] - b.coeffs_[k];
    return s;
  }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int n = std::min(a.order(), b.order());
    TruncatedSeries s(n);
    for (int i = 0; i <= n; ++i) {
      if (is_zero(a.coeffs_[i])) continue;
      for (int j = 0; i + j <= n; ++j) {
        if (is_zero(b.coeffs_[j])) continue;
        s.coeffs_[i + j] = s.coeffs_[i + j] + a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return s;
  }
  friend TruncatedSeries operator*(const Rational& c, const TruncatedSeries& a) {
    TruncatedSeries s = a;
    for (auto& x : s.coeffs_) x = c * x;
    return s;
  }

  /// Multiplicative inverse. The constant term must be a nonzero scalar;
  /// `c0` is that scalar.
  TruncatedSeries inverse(const Rational& c0) const {
    if (is_zero(c0)) throw std::domain_error("series inverse: constant term is zero");
    const int n = order();
    TruncatedSeries s(n);
    const Rational inv = 1 / c0;
    s.coeffs_[0] = C(inv);
    for (int k = 1; k <= n; ++k) {
      C acc = C(Rational(0));
      for (int j = 1; j <= k; ++j)
        if (!is_zero(coeffs_[j])) acc = acc + coeffs_[j] * s.coeffs_[k - j];
      s.coeffs_[k] = Rational(-inv) * acc;
    }
    return s;
  }

  /// sum_k c_k g^k, where g has zero constant term.
  TruncatedSeries compose(const TruncatedSeries<Rational>& g) const {
    if (!is_zero(g[0])) throw std::domain_error("series compose: inner series has a constant term");
    const int n = std::min(order(), g.order());
    TruncatedSeries s(n);
    TruncatedSeries<Rational> power = TruncatedSeries<Rational>::constant(n, Rational(1));
    for (int k = 0; k <= n; ++k) {
      for (int m = 0; m <= n; ++m)
        if (!is_zero(power[m]) && !is_zero(coeffs_[k])) s.coeffs_[m] = s.coeffs_[m] + power[m] * coeffs_[k];
      power = power * g.truncated(n);
    }
    return s;
  }

  /// The series obtained by substituting u -> u + s, i.e.
  /// w -> w / (1 + s w).
  TruncatedSeries shift_variable(const Rational& s) const {
    return compose(TruncatedSeries<Rational>::w(order()) * TruncatedSeries<Rational>::geometric(order(), -s));
  }

  bool operator==(const TruncatedSeries& o) const { return coeffs_ == o.coeffs_; }

 private:
  std::vector<C> coeffs_;
};

}  // namespace fsf
