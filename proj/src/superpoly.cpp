#include "fsf/superpoly.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "fsf/linalg.hpp"
#include "fsf/multiparam.hpp"

namespace fsf {

SuperPolynomial::SuperPolynomial(int n, Polynomial poly) : n_(n), poly_(std::move(poly)) {
  if (n < 0 || n > kMaxN) throw std::invalid_argument("SuperPolynomial supports 0.." + std::to_string(kMaxN) + " pairs of variables");
}

SuperPolynomial SuperPolynomial::x(int n, int i) { return {n, Polynomial::variable(x_var(n, i))}; }
SuperPolynomial SuperPolynomial::y(int n, int i) { return {n, Polynomial::variable(y_var(n, i))}; }

void SuperPolynomial::check_same(const SuperPolynomial& o) const {
  if (n_ != o.n_) throw std::invalid_argument("super polynomials over different variable counts");
}

SuperPolynomial& SuperPolynomial::operator+=(const SuperPolynomial& o) {
  check_same(o);
  poly_ += o.poly_;
  return *this;
}

SuperPolynomial& SuperPolynomial::operator-=(const SuperPolynomial& o) {
  check_same(o);
  poly_ -= o.poly_;
  return *this;
}

SuperPolynomial operator*(const SuperPolynomial& a, const SuperPolynomial& b) {
  a.check_same(b);
  return {a.n_, a.poly_ * b.poly_};
}

std::string SuperPolynomial::to_string() const {
  std::vector<std::string> names;
  for (int i = 1; i <= n_; ++i) names.push_back("x" + std::to_string(i));
  for (int i = 1; i <= n_; ++i) names.push_back("y" + std::to_string(i));
  return poly_.to_string(names);
}

EvalPoint::EvalPoint(std::vector<Rational> x_coords, std::vector<Rational> y_coords)
    : x(std::move(x_coords)), y(std::move(y_coords)) {
  if (x.size() != y.size()) throw std::invalid_argument("evaluation point needs as many y's as x's");
}

EvalPoint EvalPoint::parse(std::string_view text) {
  auto fail = [&]() { return std::invalid_argument("malformed point '" + std::string(text) + "', expected x=...;y=..."); };
  const auto semi = text.find(';');
  if (semi == std::string_view::npos) throw fail();
  auto coords = [&](std::string_view part, char name) {
    if (part.size() < 2 || part[0] != name || part[1] != '=') throw fail();
    part.remove_prefix(2);
    std::vector<Rational> out;
    if (part.empty()) return out;
    std::size_t start = 0;
    while (true) {
      const auto comma = part.find(',', start);
      out.push_back(parse_rational(part.substr(start, comma - start)));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    return out;
  };
  auto xs = coords(text.substr(0, semi), 'x');
  auto ys = coords(text.substr(semi + 1), 'y');
  if (xs.size() != ys.size()) throw fail();
  return EvalPoint(std::move(xs), std::move(ys));
}

namespace {

// h_k(x;y) polynomials and products of them, per variable count.
struct Specializations {
  std::vector<Polynomial> h;
  std::unordered_map<LambdaElement::Key, Polynomial> products;
};

struct SpecializationCache {
  std::mutex mutex;
  std::map<int, Specializations> per_n;
};

SpecializationCache& specialization_cache() {
  static SpecializationCache c;
  return c;
}

// Coefficients of prod (1 + y_i w) / prod (1 - x_i w) up to w^max_degree,
// over any coefficient type with + and *.
template <class T>
std::vector<T> super_h_coefficients(const std::vector<T>& xs, const std::vector<T>& ys, int max_degree) {
  std::vector<T> hx(max_degree + 1, T(0)), ey(max_degree + 1, T(0));
  hx[0] = T(1);
  ey[0] = T(1);
  for (const T& xi : xs)
    for (int m = 1; m <= max_degree; ++m) hx[m] = hx[m] + xi * hx[m - 1];
  for (const T& yi : ys)
    for (int m = max_degree; m >= 1; --m) ey[m] = ey[m] + yi * ey[m - 1];
  std::vector<T> out(max_degree + 1, T(0));
  for (int k = 0; k <= max_degree; ++k)
    for (int j = 0; j <= k; ++j) out[k] = out[k] + hx[k - j] * ey[j];
  return out;
}

const Polynomial& h_product(Specializations& s, int n, LambdaElement::Key key) {
  auto it = s.products.find(key);
  if (it != s.products.end()) return it->second;
  const Partition lambda = LambdaElement::decode(key);
  Polynomial value(1);
  if (lambda.length() > 0) {
    const int top = lambda.row(1);
    if (static_cast<int>(s.h.size()) <= top) {
      std::vector<Polynomial> xs, ys;
      for (int i = 1; i <= n; ++i) {
        xs.push_back(Polynomial::variable(SuperPolynomial::x_var(n, i)));
        ys.push_back(Polynomial::variable(SuperPolynomial::y_var(n, i)));
      }
      s.h = super_h_coefficients(xs, ys, std::max(top, 2 * static_cast<int>(s.h.size())));
    }
    std::vector<int> rest(lambda.parts().begin() + 1, lambda.parts().end());
    value = s.h[top] * h_product(s, n, LambdaElement::encode(Partition(std::move(rest))));
  }
  return s.products.emplace(key, std::move(value)).first->second;
}

}  // namespace

SuperPolynomial specialize(const LambdaElement& f, int n) {
  if (n < 1 || n > SuperPolynomial::kMaxN)
    throw std::invalid_argument("specialize: n must be in 1.." + std::to_string(SuperPolynomial::kMaxN));
  auto& cache = specialization_cache();
  std::lock_guard lock(cache.mutex);
  Specializations& s = cache.per_n[n];
  PolynomialAccumulator acc;
  for (const auto& [key, c] : f.raw_terms()) acc.add(h_product(s, n, key), c);
  return {n, acc.take()};
}

std::vector<Rational> super_h_values(const EvalPoint& pt, int max_degree) {
  return super_h_coefficients(pt.x, pt.y, std::max(max_degree, 0));
}

Rational eval(const LambdaElement& f, const EvalPoint& pt) {
  if (f.is_zero()) return 0;
  return evaluate_h(f, super_h_values(pt, f.degree()));
}

Rational eval(const SuperPolynomial& f, const EvalPoint& pt) {
  const int n = f.n();
  std::vector<Rational> values(2 * n);
  for (int i = 1; i <= pt.n(); ++i) {
    if (i > n) {
      if (pt.x[i - 1] != 0 || pt.y[i - 1] != 0)
        throw std::invalid_argument("evaluation point has nonzero coordinates beyond the polynomial's variables");
      continue;
    }
    values[SuperPolynomial::x_var(n, i)] = pt.x[i - 1];
    values[SuperPolynomial::y_var(n, i)] = pt.y[i - 1];
  }
  return f.poly().evaluate(values);
}

EvalPoint diagram_point(const Partition& lambda, const ParameterSequence& a, int n) {
  const FrobeniusCoords c = frobenius(lambda);
  if (n < c.depth())
    throw std::invalid_argument("diagram_point: n = " + std::to_string(n) + " is below the depth of " +
                                lambda.to_string());
  const ParameterSequence dual = a.dual();
  EvalPoint pt{std::vector<Rational>(n), std::vector<Rational>(n)};
  for (int i = 0; i < c.depth(); ++i) {
    pt.x[i] = a[c.p[i] + 1];
    pt.y[i] = dual[c.q[i] + 1];
  }
  return pt;
}

bool is_supersymmetric(const SuperPolynomial& f) {
  const int n = f.n();
  if (n == 0) return true;
  for (int i = 1; i < n; ++i) {
    for (auto var : {SuperPolynomial::x_var, SuperPolynomial::y_var}) {
      std::vector<int> swap(2 * n);
      std::iota(swap.begin(), swap.end(), 0);
      std::swap(swap[var(n, i)], swap[var(n, i + 1)]);
      if (f.poly().remap(swap) != f.poly()) return false;
    }
  }
  // Put t = x_1 and y_1 = -t; the result must not involve x_1.
  const int x1 = SuperPolynomial::x_var(n, 1);
  const Polynomial cancelled = f.poly().substitute(SuperPolynomial::y_var(n, 1), Polynomial::variable(x1, -1));
  return cancelled.degree_in(x1) <= 0;
}

SuperPolynomial restrict_last(const SuperPolynomial& f) {
  const int n = f.n();
  if (n < 1) throw std::invalid_argument("restrict_last needs at least one pair of variables");
  std::vector<int> target(2 * n);
  for (int i = 1; i <= n; ++i) {
    target[SuperPolynomial::x_var(n, i)] = i < n ? SuperPolynomial::x_var(n - 1, i) : -1;
    target[SuperPolynomial::y_var(n, i)] = i < n ? SuperPolynomial::y_var(n - 1, i) : -1;
  }
  return {n - 1, f.poly().remap(target)};
}

namespace {

int permutation_sign(const std::vector<int>& perm) {
  int inversions = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j) inversions += perm[i] > perm[j];
  return inversions % 2 ? -1 : 1;
}

int field_shift(int v) { return Polynomial::kBits * (Polynomial::kMaxVars - 1 - v); }

// Moves the exponent of each variable v to variable target[v].
Polynomial::Monomial permute_monomial(Polynomial::Monomial m, const std::vector<int>& target) {
  Polynomial::Monomial out = 0;
  for (std::size_t v = 0; v < target.size(); ++v)
    out |= static_cast<Polynomial::Monomial>(Polynomial::exponent(m, static_cast<int>(v))) << field_shift(target[v]);
  return out;
}

std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do out.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

// Rewrites f so that within each listed block of variables the exponents
// are strictly decreasing, using sign(w) w[m] for the sorting permutation w
// and dropping monomials with a repeated exponent. Alternating over the
// block's symmetric group gives the same sum for f and the result.
Polynomial fold_to_decreasing(const Polynomial& f, const std::vector<int>& block_starts, int n) {
  std::unordered_map<Polynomial::Monomial, Rational> acc;
  acc.reserve(f.size());
  std::vector<int> e(n);
  for (const auto& [m, c] : f.terms()) {
    Polynomial::Monomial image = m;
    bool negative = false, repeated = false;
    for (int start : block_starts) {
      for (int i = 0; i < n; ++i) e[i] = Polynomial::exponent(m, start + i);
      // Insertion sort into decreasing order, counting transpositions.
      for (int i = 1; i < n; ++i)
        for (int j = i; j > 0 && e[j - 1] < e[j]; --j) {
          std::swap(e[j - 1], e[j]);
          negative = !negative;
        }
      for (int i = 1; i < n; ++i) repeated = repeated || e[i - 1] == e[i];
      for (int i = 0; i < n; ++i) {
        const int shift = field_shift(start + i);
        image &= ~(static_cast<Polynomial::Monomial>(Polynomial::kMaxExponent) << shift);
        image |= static_cast<Polynomial::Monomial>(e[i]) << shift;
      }
    }
    if (repeated) continue;
    Rational& slot = acc[image];
    if (negative) slot -= c;
    else slot += c;
  }
  std::vector<Polynomial::Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (!is_zero(c)) terms.emplace_back(m, std::move(c));
  return Polynomial::from_terms(std::move(terms));
}

// Sum of sign(w) w[f] over w in `group`, where each element lists the target
// of every polynomial variable. For folded input the images are pairwise
// distinct, so collecting and sorting once is enough.
Polynomial alternate(const Polynomial& f, const std::vector<std::pair<std::vector<int>, int>>& group) {
  std::vector<Polynomial::Term> terms;
  terms.reserve(f.size() * group.size());
  for (const auto& [target, sign] : group)
    for (const auto& [m, c] : f.terms()) terms.emplace_back(permute_monomial(m, target), sign > 0 ? c : Rational(-c));
  return Polynomial::from_terms(std::move(terms));
}

// Group elements permuting the x block, the y block, or both.
std::vector<std::pair<std::vector<int>, int>> permutation_group(int n, bool permute_x, bool permute_y) {
  const auto perms = all_permutations(n);
  const std::vector<int> identity = perms.front();
  const auto& xs = permute_x ? perms : std::vector<std::vector<int>>{identity};
  const auto& ys = permute_y ? perms : std::vector<std::vector<int>>{identity};
  std::vector<std::pair<std::vector<int>, int>> group;
  for (const auto& wx : xs)
    for (const auto& wy : ys) {
      std::vector<int> target(2 * n);
      for (int i = 0; i < n; ++i) {
        target[i] = wx[i];
        target[n + i] = n + wy[i];
      }
      group.emplace_back(std::move(target), permutation_sign(wx) * permutation_sign(wy));
    }
  return group;
}

Polynomial divide_by_vandermonde(Polynomial p, int first_var, int n) {
  for (int i = 0; i < n; ++i)
    for (int k = i + 1; k < n; ++k) p = p.divide_by_difference(first_var + i, first_var + k);
  return p;
}

}  // namespace

SuperPolynomial sergeev_pragacz(const Partition& mu, const ParameterSequence& a, int n, Antisymmetrizer mode) {
  const int d = mu.depth();
  if (n < d) throw std::invalid_argument("sergeev_pragacz: n = " + std::to_string(n) + " is below the depth of " + mu.to_string());
  if (n < 1 || n > SuperPolynomial::kMaxN)
    throw std::invalid_argument("sergeev_pragacz: n must be in 1.." + std::to_string(SuperPolynomial::kMaxN));
  const ParameterSequence dual = a.dual();
  const Partition conj = mu.conjugate();
  auto xv = [&](int i) { return SuperPolynomial::x_var(n, i); };
  auto yv = [&](int i) { return SuperPolynomial::y_var(n, i); };

  Polynomial f(1);
  for (int i = 1; i <= d; ++i) {
    f *= factorial_power(a, mu.row(i) - i, xv(i)) * Polynomial::variable(xv(i)).pow(std::max(n - mu.row(i), 0));
    f *= factorial_power(dual, conj.row(i) - i, yv(i)) * Polynomial::variable(yv(i)).pow(std::max(n - conj.row(i), 0));
  }
  for (int i = d + 1; i <= n; ++i) f *= Polynomial::variable(xv(i)).pow(n - i) * Polynomial::variable(yv(i)).pow(n - i);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n && j <= mu.row(i); ++j) f *= Polynomial::variable(xv(i)) + Polynomial::variable(yv(j));

  Polynomial result;
  if (mode == Antisymmetrizer::literal) {
    result = alternate(fold_to_decreasing(f, {xv(1), yv(1)}, n), permutation_group(n, true, true));
    result = divide_by_vandermonde(std::move(result), xv(1), n);
    result = divide_by_vandermonde(std::move(result), yv(1), n);
  } else {
    result = alternate(fold_to_decreasing(f, {xv(1)}, n), permutation_group(n, true, false));
    result = divide_by_vandermonde(std::move(result), xv(1), n);
    result = alternate(fold_to_decreasing(result, {yv(1)}, n), permutation_group(n, false, true));
    result = divide_by_vandermonde(std::move(result), yv(1), n);
  }
  return {n, std::move(result)};
}

SuperPolynomial berele_regev_factor(const Partition& mu, const ParameterSequence& a) {
  const FrobeniusCoords c = frobenius(mu);
  const int d = c.depth();
  if (d == 0) return {0, Polynomial(1)};
  const ParameterSequence dual = a.dual();
  std::vector<std::vector<Polynomial>> mx(d, std::vector<Polynomial>(d)), my = mx;
  for (int i = 1; i <= d; ++i)
    for (int j = 1; j <= d; ++j) {
      mx[i - 1][j - 1] = factorial_power(a, c.p[j - 1], SuperPolynomial::x_var(d, i));
      my[i - 1][j - 1] = factorial_power(dual, c.q[j - 1], SuperPolynomial::y_var(d, i));
    }
  const Polynomial qx = divide_by_vandermonde(ring_determinant(mx, Polynomial(1)), SuperPolynomial::x_var(d, 1), d);
  const Polynomial qy = divide_by_vandermonde(ring_determinant(my, Polynomial(1)), SuperPolynomial::y_var(d, 1), d);
  Polynomial cross(1);
  for (int i = 1; i <= d; ++i)
    for (int j = 1; j <= d; ++j)
      cross *= Polynomial::variable(SuperPolynomial::x_var(d, i)) + Polynomial::variable(SuperPolynomial::y_var(d, j));
  return {d, qx * qy * cross};
}

SpecialValue special_value(const Partition& mu, const ParameterSequence& a, SpecialValueRoute route) {
  auto cell_product = [&]() {
    const Partition conj = mu.conjugate();
    Rational v = 1;
    for (const auto& cell : SkewShape(mu).cells())
      v *= a[mu.row(cell.row) - cell.row + 1] - a[cell.col - conj.row(cell.col)];
    return v;
  };
  if (route == SpecialValueRoute::cell_product) return {cell_product(), route, false};

  const FrobeniusCoords c = frobenius(mu);
  const ParameterSequence dual = a.dual();
  const int d = c.depth();
  Rational num = 1, den = 1;
  for (int i = 0; i < d; ++i) {
    for (int m = 1; m <= c.p[i]; ++m) num *= a[c.p[i] + 1] - a[m];
    for (int m = 1; m <= c.q[i]; ++m) num *= dual[c.q[i] + 1] - dual[m];
    for (int j = 0; j < d; ++j) num *= a[c.p[i] + 1] + dual[c.q[j] + 1];
    for (int k = i + 1; k < d; ++k) den *= (a[c.p[i] + 1] - a[c.p[k] + 1]) * (dual[c.q[i] + 1] - dual[c.q[k] + 1]);
  }
  if (is_zero(den)) return {cell_product(), SpecialValueRoute::cell_product, true};
  return {num / den, route, false};
}

bool vanishing_check(const Partition& mu, const Partition& lambda, const ParameterSequence& a) {
  const int n = std::max(mu.depth(), lambda.depth());
  return is_zero(eval(s_multi(mu, a), diagram_point(lambda, a, n)));
}

LambdaElement interpolation_solve(const Partition& mu, const ParameterSequence& a) {
  const int m = mu.size();
  std::vector<Partition> unknowns;
  for (int k = 0; k < m; ++k)
    for (auto& nu : partitions_of(k)) unknowns.push_back(std::move(nu));
  if (unknowns.empty()) return schur(mu);
  RationalMatrix rows;
  std::vector<Rational> rhs;
  for (const auto& lambda : partitions_up_to(m)) {
    if (lambda == mu) continue;
    const auto hv = super_h_values(diagram_point(lambda, a, lambda.depth()), m);
    std::vector<Rational> row;
    row.reserve(unknowns.size());
    for (const auto& nu : unknowns) row.push_back(evaluate_h(schur(nu), hv));
    rows.push_back(std::move(row));
    rhs.push_back(-evaluate_h(schur(mu), hv));
  }
  const auto coeffs = solve_unique(std::move(rows), std::move(rhs));
  LambdaElement out = schur(mu);
  for (std::size_t i = 0; i < unknowns.size(); ++i) out += coeffs[i] * schur(unknowns[i]);
  return out;
}

}  // namespace fsf
