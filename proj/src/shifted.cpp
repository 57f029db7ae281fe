#include "fsf/shifted.hpp"

#include <stdexcept>

#include "fsf/linalg.hpp"
#include "fsf/multiparam.hpp"
#include "fsf/series.hpp"
#include "fsf/superpoly.hpp"

namespace fsf {

Rational falling_factorial(const Rational& x, int m) {
  if (m < 0) throw std::invalid_argument("falling_factorial: negative length");
  Rational out = 1;
  for (int i = 0; i < m; ++i) out *= x - i;
  return out;
}

Rational shifted_schur_eval(const Partition& mu, const std::vector<Rational>& x) {
  const int n = std::max(mu.length(), static_cast<int>(x.size()));
  if (n == 0) return 1;
  RationalMatrix num(n, std::vector<Rational>(n)), den(n, std::vector<Rational>(n));
  for (int i = 1; i <= n; ++i) {
    const Rational shifted = (i <= static_cast<int>(x.size()) ? x[i - 1] : Rational(0)) + (n - i);
    for (int j = 1; j <= n; ++j) {
      num[i - 1][j - 1] = falling_factorial(shifted, mu.row(j) + n - j);
      den[i - 1][j - 1] = falling_factorial(shifted, n - j);
    }
  }
  const Rational d = determinant(std::move(den));
  if (d == 0) throw std::domain_error("shifted_schur_eval: the x_i + n - i are not distinct");
  return determinant(std::move(num)) / d;
}

std::vector<Rational> row_point(const Partition& lambda) {
  return {lambda.parts().begin(), lambda.parts().end()};
}

Rational dim_ratio_shifted(const Partition& mu, const Partition& nu) {
  if (mu.size() > nu.size()) return 0;
  return shifted_schur_eval(mu, row_point(nu)) / falling_factorial(nu.size(), mu.size());
}

Rational dim_ratio_fs(const Partition& mu, const Partition& nu) {
  if (mu.size() > nu.size()) return 0;
  const Rational value = eval(fs_function(mu), diagram_point(nu, ParameterSequence::fs(), nu.depth()));
  return value / falling_factorial(nu.size(), mu.size());
}

Rational dim_ratio_brute(const Partition& mu, const Partition& nu) {
  return Rational(dim_skew(mu, nu, SkewDimMethod::brute)) / Rational(dim(nu, DimMethod::brute));
}

std::pair<Rational, Rational> phi_sides(const Partition& mu, const Partition& lambda) {
  const Rational shifted = shifted_schur_eval(mu, row_point(lambda));
  const Rational fs = eval(fs_function(mu), diagram_point(lambda, ParameterSequence::fs(), lambda.depth()));
  return {shifted, fs};
}

bool phi_check(const Partition& mu, const Partition& lambda) {
  const auto [shifted, fs] = phi_sides(mu, lambda);
  return shifted == fs;
}

namespace {

using Series = TruncatedSeries<Rational>;

// 1 + c w, truncated.
Series linear(int order, const Rational& c) {
  Series s = Series::constant(order, 1);
  if (order >= 1) s[1] = c;
  return s;
}

// sum_k values[k] w^k prod_{j<k} 1/(1 + (start + step*j) w).
Series falling_expansion(int order, const std::vector<Rational>& values, const Rational& start, const Rational& step) {
  Series total(order), basis = Series::constant(order, 1);
  for (int k = 0; k <= order; ++k) {
    total = total + values[k] * basis;
    // basis *= w / (1 + (start + step*k) w)
    Series next(order);
    const Series inv = Series::geometric(order, -(start + step * k));
    const Series shifted = basis * inv;
    for (int m = order; m >= 1; --m) next[m] = shifted[m - 1];
    basis = next;
  }
  return total;
}

}  // namespace

bool shifted_series_check(int order, const std::vector<Rational>& x) {
  if (order < 0) throw std::invalid_argument("series order must be nonnegative");
  std::vector<Rational> h(order + 1), e(order + 1), e_neg(order + 1);
  for (int k = 0; k <= order; ++k) {
    h[k] = shifted_schur_eval(Partition(std::vector<int>(k > 0 ? 1 : 0, k)), x);
    e[k] = shifted_schur_eval(Partition(std::vector<int>(k, 1)), x);
    // 1/(-u-1)_k = (-1)^k / ((u+1)(u+2)...(u+k)).
    e_neg[k] = k % 2 ? -e[k] : e[k];
  }
  // 1/(u)_k = w^k prod_{j<k} 1/(1 - j w).
  const Series H = falling_expansion(order, h, 0, -1);
  const Series E = falling_expansion(order, e, 0, -1);
  // 1/((u+1)...(u+k)) = w^k prod_{j<k} 1/(1 + (j+1) w).
  const Series E_reflected = falling_expansion(order, e_neg, 1, 1);

  Series h_product = Series::constant(order, 1), e_product = Series::constant(order, 1);
  for (std::size_t idx = 0; idx < x.size(); ++idx) {
    const Rational i = static_cast<int>(idx) + 1;
    h_product = h_product * linear(order, i) * linear(order, i - x[idx]).inverse(1);
    e_product = e_product * linear(order, x[idx] - i + 1) * linear(order, 1 - i).inverse(1);
  }
  const Series one = Series::constant(order, 1);
  return H == h_product && E == e_product && H * E_reflected == one;
}

}  // namespace fsf
