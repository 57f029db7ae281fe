#include "fsf/multiparam.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "fsf/linalg.hpp"

namespace fsf {

std::vector<std::vector<Rational>> complete_homogeneous_table(const std::vector<Rational>& values, int max_degree) {
  const std::size_t n = values.size();
  std::vector<std::vector<Rational>> table(n + 1, std::vector<Rational>(max_degree + 1));
  table[0][0] = 1;
  for (std::size_t j = 1; j <= n; ++j) {
    table[j][0] = 1;
    // h_m(v_1..v_j) = h_m(v_1..v_{j-1}) + v_j h_{m-1}(v_1..v_j).
    for (int m = 1; m <= max_degree; ++m) table[j][m] = table[j - 1][m] + values[j - 1] * table[j][m - 1];
  }
  return table;
}

namespace {

// Solves 1 + sum_k f_k / (u - c_1)...(u - c_k) = 1 + sum_k g_k / u^k for
// the f_k. Since 1/((u-c_1)...(u-c_j)) = sum_m h_m(c_1..c_j) u^{-j-m},
// g_n = sum_{j=1}^n f_j h_{n-j}(c_1..c_j).
std::vector<LambdaElement> recoordinate(const std::vector<LambdaElement>& g, const std::vector<Rational>& c) {
  const int top = static_cast<int>(g.size()) - 1;
  const auto table = complete_homogeneous_table(c, top);
  std::vector<LambdaElement> f(top + 1);
  f[0] = LambdaElement(1);
  for (int n = 1; n <= top; ++n) {
    LambdaElement next = g[n];
    for (int j = 1; j < n; ++j) next -= table[j][n - j] * f[j];
    f[n] = std::move(next);
  }
  return f;
}

std::vector<Rational> values_from(const ParameterSequence& a, int first, int count) {
  std::vector<Rational> v;
  v.reserve(std::max(count, 0));
  for (int i = 0; i < count; ++i) v.push_back(a.value_at(first + i));
  return v;
}

// Memoizes h_{.;tau^r a} and e_{.;tau^r a} for one determinant evaluation.
class ShiftedGenerators {
 public:
  explicit ShiftedGenerators(const ParameterSequence& a) : a_(a) {}

  const LambdaElement& h(int k, int r) { return get(h_cache_, k, r, true); }
  const LambdaElement& e(int k, int r) { return get(e_cache_, k, r, false); }

 private:
  const LambdaElement& get(std::map<int, std::vector<LambdaElement>>& cache, int k, int r, bool is_h) {
    static const LambdaElement kZero;
    if (k < 0) return kZero;
    auto it = cache.find(r);
    if (it == cache.end() || static_cast<int>(it->second.size()) <= k) {
      const ParameterSequence shifted = a_.shift(r);
      auto all = is_h ? h_multi_all(shifted, k) : e_multi_all(shifted, k);
      it = cache.insert_or_assign(r, std::move(all)).first;
    }
    return it->second[k];
  }

  ParameterSequence a_;
  std::map<int, std::vector<LambdaElement>> h_cache_;
  std::map<int, std::vector<LambdaElement>> e_cache_;
};

LambdaElement jacobi_trudi(const Partition& mu, ShiftedGenerators& gen) {
  const int l = mu.length();
  std::vector<std::vector<LambdaElement>> m(l, std::vector<LambdaElement>(l));
  for (int i = 1; i <= l; ++i)
    for (int j = 1; j <= l; ++j) m[i - 1][j - 1] = gen.h(mu.row(i) - i + j, 1 - j);
  return ring_determinant(m, LambdaElement(1));
}

LambdaElement nagelsbach_kostka(const Partition& mu, ShiftedGenerators& gen) {
  const Partition conj = mu.conjugate();
  const int l = conj.length();
  std::vector<std::vector<LambdaElement>> m(l, std::vector<LambdaElement>(l));
  for (int i = 1; i <= l; ++i)
    for (int j = 1; j <= l; ++j) m[i - 1][j - 1] = gen.e(conj.row(i) - i + j, j - 1);
  return ring_determinant(m, LambdaElement(1));
}

Partition hook_shape(int p, int q) {
  std::vector<int> parts{p + 1};
  parts.insert(parts.end(), q, 1);
  return Partition(std::move(parts));
}

}  // namespace

std::vector<LambdaElement> h_multi_all(const ParameterSequence& a, int max_k) {
  if (max_k < 0) return {};
  std::vector<LambdaElement> h(max_k + 1);
  for (int k = 0; k <= max_k; ++k) h[k] = LambdaElement::h(k);
  return recoordinate(h, values_from(a, 1, max_k));
}

std::vector<LambdaElement> e_multi_all(const ParameterSequence& a, int max_k) {
  if (max_k < 0) return {};
  std::vector<LambdaElement> e(max_k + 1);
  for (int k = 0; k <= max_k; ++k) e[k] = e_gen(k);
  return recoordinate(e, values_from(a.dual(), 1, max_k));
}

LambdaElement h_multi(int k, const ParameterSequence& a) {
  if (k < 0) return {};
  return h_multi_all(a, k)[k];
}

LambdaElement e_multi(int k, const ParameterSequence& a) {
  if (k < 0) return {};
  return e_multi_all(a, k)[k];
}

LambdaElement hook_multi(int p, int q, const ParameterSequence& a) {
  if (p < 0 || q < 0) throw std::invalid_argument("hook_multi: negative Frobenius coordinate");
  ShiftedGenerators gen(a);
  return jacobi_trudi(hook_shape(p, q), gen);
}

LambdaElement s_multi(const Partition& mu, const ParameterSequence& a, SchurRoute route) {
  ShiftedGenerators gen(a);
  switch (route) {
    case SchurRoute::jacobi_trudi:
      return jacobi_trudi(mu, gen);
    case SchurRoute::nagelsbach_kostka:
      return nagelsbach_kostka(mu, gen);
    case SchurRoute::giambelli: {
      const FrobeniusCoords c = frobenius(mu);
      const int d = c.depth();
      std::map<std::pair<int, int>, LambdaElement> hooks;
      std::vector<std::vector<LambdaElement>> m(d, std::vector<LambdaElement>(d));
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
          const auto key = std::make_pair(c.p[i], c.q[j]);
          auto it = hooks.find(key);
          if (it == hooks.end()) it = hooks.emplace(key, jacobi_trudi(hook_shape(key.first, key.second), gen)).first;
          m[i][j] = it->second;
        }
      return ring_determinant(m, LambdaElement(1));
    }
  }
  throw std::logic_error("unknown SchurRoute");
}

LambdaElement fs_function(const Partition& mu) { return s_multi(mu, ParameterSequence::fs()); }

LambdaElement fs_function_by_t_shift(const Partition& mu) {
  const int l = mu.length();
  const auto fh = h_multi_all(ParameterSequence::fs(), std::max(mu.row(1) + l, 0));
  std::vector<std::vector<LambdaElement>> m(l, std::vector<LambdaElement>(l));
  for (int i = 1; i <= l; ++i)
    for (int j = 1; j <= l; ++j) {
      const int k = mu.row(i) - i + j;
      if (k >= 0) m[i - 1][j - 1] = t_shift(fh[k], j - 1);
    }
  return ring_determinant(m, LambdaElement(1));
}

LambdaElement s_multi_skew(const Partition& lambda, const Partition& mu, const ParameterSequence& a) {
  const int l = std::max(lambda.length(), mu.length());
  ShiftedGenerators gen(a);
  std::vector<std::vector<LambdaElement>> m(l, std::vector<LambdaElement>(l));
  for (int i = 1; i <= l; ++i)
    for (int j = 1; j <= l; ++j) m[i - 1][j - 1] = gen.h(lambda.row(i) - mu.row(j) - i + j, mu.row(j) - j + 1);
  return ring_determinant(m, LambdaElement(1));
}

Rational transition_coeff(int p, int p_prime, const ParameterSequence& a, const ParameterSequence& b) {
  if (p_prime < 0 || p < p_prime) return 0;
  const int k = p - p_prime;
  // h_k(b_1..b_{p'+1}; -a_1..-a_p) = sum_i h_i(b's) e_{k-i}(-a's).
  const auto hb = complete_homogeneous_table(values_from(b, 1, p_prime + 1), k);
  std::vector<Rational> e(k + 1);  // e_m(-a_1, ..., -a_p)
  e[0] = 1;
  for (int i = 1; i <= p; ++i) {
    const Rational v = -a.value_at(i);
    for (int m = std::min(i, k); m >= 1; --m) e[m] += v * e[m - 1];
  }
  Rational total = 0;
  for (int i = 0; i <= k; ++i) total += hb[p_prime + 1][i] * e[k - i];
  return total;
}

Rational transition_entry(const Partition& mu, const Partition& nu, const ParameterSequence& a,
                          const ParameterSequence& b) {
  if (!contains(nu, mu) || nu.depth() != mu.depth()) return 0;
  const FrobeniusCoords cm = frobenius(mu);
  const FrobeniusCoords cn = frobenius(nu);
  const int d = cm.depth();
  const ParameterSequence a_dual = a.dual();
  const ParameterSequence b_dual = b.dual();
  RationalMatrix arms(d, std::vector<Rational>(d));
  RationalMatrix legs(d, std::vector<Rational>(d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      arms[i][j] = transition_coeff(cm.p[i], cn.p[j], a, b);
      legs[i][j] = transition_coeff(cm.q[i], cn.q[j], a_dual, b_dual);
    }
  return determinant(std::move(arms)) * determinant(std::move(legs));
}

SchurExpansion transition_row(const Partition& mu, const ParameterSequence& a, const ParameterSequence& b) {
  SchurExpansion row;
  for (int size = 0; size <= mu.size(); ++size)
    for (const auto& nu : partitions_of(size)) {
      if (!contains(nu, mu)) continue;
      Rational c = transition_entry(mu, nu, a, b);
      if (!is_zero(c)) row.emplace(nu, std::move(c));
    }
  return row;
}

bool hook_identity_check(int p, int q, const ParameterSequence& a) {
  const Rational scalar = a.value_at(p + 1) + a.dual().value_at(q + 1);
  const LambdaElement lhs =
      hook_multi(p + 1, q, a) + hook_multi(p, q + 1, a) + scalar * hook_multi(p, q, a);
  const LambdaElement rhs = hook_multi(p, 0, a) * hook_multi(0, q, a);
  const int degree = p + q + 3;
  return lhs.truncated(degree) == rhs.truncated(degree);
}

namespace {

// 1 / (u - c_1)...(u - c_k) as a series in w = 1/u.
TruncatedSeries<Rational> inverse_factorial_power(const std::vector<Rational>& c, int k, int order) {
  TruncatedSeries<Rational> s = TruncatedSeries<Rational>::constant(order, Rational(1));
  for (int i = 0; i < k; ++i)
    s = s * TruncatedSeries<Rational>::w(order) * TruncatedSeries<Rational>::geometric(order, c[i]);
  return s;
}

bool series_check(const std::vector<LambdaElement>& fk, const std::vector<Rational>& c,
                  const TruncatedSeries<LambdaElement>& target, int order) {
  if (static_cast<int>(fk.size()) <= order) throw std::invalid_argument("series check: too few coefficients");
  TruncatedSeries<LambdaElement> sum(order);
  for (int k = 0; k <= order; ++k) {
    const auto basis = inverse_factorial_power(c, k, order);
    for (int m = k; m <= order; ++m)
      if (!is_zero(basis[m])) sum[m] += basis[m] * fk[k];
  }
  return sum == target.truncated(order);
}

}  // namespace

bool h_series_check(const std::vector<LambdaElement>& hk, const ParameterSequence& a, int order) {
  return series_check(hk, values_from(a, 1, order), H_series(order), order);
}

bool e_series_check(const std::vector<LambdaElement>& ek, const ParameterSequence& a, int order) {
  return series_check(ek, values_from(a.dual(), 1, order), E_series(order), order);
}

bool hook_series_check(const ParameterSequence& a, int order) {
  // Coefficients are indexed by (i, j) for w^i z^j with w = 1/u, z = 1/v.
  // S = sum s_{(p|q);a} w^{p+1} z^{q+1} A_{p+1}(w) B_{q+1}(z), where A, B
  // are the factorial-power tails. Multiplying by u + v = 1/w + 1/z gives
  // coefficient S[i+1][j] + S[i][j+1] at (i, j).
  const int n = order + 1;
  const auto av = values_from(a, 1, n);
  const auto bv = values_from(a.dual(), 1, n);
  std::vector<TruncatedSeries<Rational>> u_side(n + 1), v_side(n + 1);
  for (int k = 0; k <= n; ++k) {
    u_side[k] = inverse_factorial_power(av, k, n);
    v_side[k] = inverse_factorial_power(bv, k, n);
  }
  std::vector<std::vector<LambdaElement>> s(n + 1, std::vector<LambdaElement>(n + 1));
  for (int p = 0; p + 1 <= n; ++p)
    for (int q = 0; q + 1 <= n; ++q) {
      const LambdaElement hook = hook_multi(p, q, a);
      for (int i = p + 1; i <= n; ++i) {
        if (is_zero(u_side[p + 1][i])) continue;
        for (int j = q + 1; j <= n; ++j) {
          const Rational c = u_side[p + 1][i] * v_side[q + 1][j];
          if (!is_zero(c)) s[i][j] += c * hook;
        }
      }
    }
  for (int i = 0; i <= order; ++i)
    for (int j = 0; j <= order; ++j) {
      LambdaElement lhs = s[i + 1][j] + s[i][j + 1];
      if (i == 0 && j == 0) lhs += LambdaElement(1);
      if (lhs != LambdaElement::h(i) * e_gen(j)) return false;
    }
  return true;
}

}  // namespace fsf
