#include "fsf/polynomial.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace fsf {

namespace {

// One bit just above each exponent field; a carry out of a field lands here.
constexpr Polynomial::Monomial carry_mask() {
  Polynomial::Monomial mask = 0;
  for (int v = 0; v < Polynomial::kMaxVars; ++v) mask |= Polynomial::Monomial{1} << (Polynomial::kBits * (v + 1));
  return mask;
}

bool term_order(const Polynomial::Term& a, const Polynomial::Term& b) { return a.first > b.first; }

void check_var(int v) {
  if (v < 0 || v >= Polynomial::kMaxVars) throw std::out_of_range("polynomial variable index " + std::to_string(v));
}

}  // namespace

Polynomial::Polynomial(const Rational& c) {
  if (!fsf::is_zero(c)) terms_.emplace_back(0, c);
}

Polynomial Polynomial::variable(int v, const Rational& coeff) {
  check_var(v);
  Polynomial p;
  if (!fsf::is_zero(coeff)) p.terms_.emplace_back(unit(v), coeff);
  return p;
}

Polynomial Polynomial::monomial(const std::vector<int>& exponents, const Rational& coeff) {
  Polynomial p;
  if (!fsf::is_zero(coeff)) p.terms_.emplace_back(pack(exponents), coeff);
  return p;
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), term_order);
  Polynomial p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().first == t.first) {
      p.terms_.back().second += t.second;
      if (fsf::is_zero(p.terms_.back().second)) p.terms_.pop_back();
    } else if (!fsf::is_zero(t.second)) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

Polynomial::Monomial Polynomial::pack(const std::vector<int>& exponents) {
  if (exponents.size() > static_cast<std::size_t>(kMaxVars)) throw std::out_of_range("too many polynomial variables");
  Monomial m = 0;
  for (std::size_t v = 0; v < exponents.size(); ++v) {
    if (exponents[v] < 0 || exponents[v] > kMaxExponent) throw std::overflow_error("polynomial exponent out of range");
    m |= static_cast<Monomial>(exponents[v]) << shift(static_cast<int>(v));
  }
  return m;
}

int Polynomial::total_degree(Monomial m) {
  int d = 0;
  for (int v = 0; v < kMaxVars; ++v) d += exponent(m, v);
  return d;
}

Polynomial::Monomial Polynomial::multiply(Monomial m1, Monomial m2) {
  const Monomial sum = m1 + m2;
  if ((sum ^ m1 ^ m2) & carry_mask()) throw std::overflow_error("polynomial exponent overflow");
  return sum;
}

int Polynomial::total_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, total_degree(m));
  return d;
}

int Polynomial::degree_in(int v) const {
  check_var(v);
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, exponent(m, v));
  return d;
}

Rational Polynomial::coefficient(Monomial m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), Term{m, 0}, term_order);
  return it != terms_.end() && it->first == m ? it->second : Rational(0);
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& t : p.terms_) t.second = -t.second;
  return p;
}

namespace {

template <class Combine>
std::vector<Polynomial::Term> merge(const std::vector<Polynomial::Term>& a, const std::vector<Polynomial::Term>& b,
                                    Combine sign) {
  std::vector<Polynomial::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first > b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first > a[i].first) {
      out.emplace_back(b[j].first, sign(b[j].second));
      ++j;
    } else {
      Rational c = a[i].second + sign(b[j].second);
      if (!is_zero(c)) out.emplace_back(a[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  terms_ = merge(terms_, o.terms_, [](const Rational& c) { return c; });
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  terms_ = merge(terms_, o.terms_, [](const Rational& c) { return Rational(-c); });
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (fsf::is_zero(c)) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Polynomial::Term> out;
  out.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.emplace_back(Polynomial::multiply(ma, mb), ca * cb);
  return Polynomial::from_terms(std::move(out));
}

Polynomial Polynomial::pow(int k) const {
  if (k < 0) throw std::invalid_argument("negative polynomial power");
  Polynomial out(1);
  for (int i = 0; i < k; ++i) out = out * *this;
  return out;
}

Rational Polynomial::evaluate(const std::vector<Rational>& values) const {
  // Powers are cached per variable since many terms share them.
  std::vector<std::vector<Rational>> powers(kMaxVars);
  auto power_of = [&](int v, int e) -> const Rational& {
    auto& row = powers[v];
    if (row.empty()) row.push_back(1);
    const Rational base = v < static_cast<int>(values.size()) ? values[v] : Rational(0);
    while (static_cast<int>(row.size()) <= e) row.push_back(row.back() * base);
    return row[e];
  };
  Rational total = 0;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (int v = 0; v < kMaxVars && !fsf::is_zero(t); ++v) {
      const int e = exponent(m, v);
      if (e) t *= power_of(v, e);
    }
    total += t;
  }
  return total;
}

Polynomial Polynomial::substitute(int v, const Polynomial& value) const {
  check_var(v);
  // Group by the exponent of v, then evaluate by Horner in `value`.
  std::map<int, std::vector<Term>> groups;
  for (const auto& [m, c] : terms_) {
    const int e = exponent(m, v);
    groups[e].emplace_back(m & ~(static_cast<Monomial>(kMaxExponent) << shift(v)), c);
  }
  Polynomial out;
  int current = groups.empty() ? 0 : groups.rbegin()->first;
  for (auto it = groups.rbegin(); it != groups.rend(); ++it) {
    while (current > it->first) {
      out = out * value;
      --current;
    }
    out += from_terms(std::move(it->second));
  }
  while (current > 0) {
    out = out * value;
    --current;
  }
  return out;
}

Polynomial Polynomial::remap(const std::vector<int>& target) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [m, c] : terms_) {
    Monomial image = 0;
    bool vanishes = false;
    for (int v = 0; v < kMaxVars; ++v) {
      const int e = exponent(m, v);
      if (!e) continue;
      const int t = v < static_cast<int>(target.size()) ? target[v] : v;
      if (t < 0) {
        vanishes = true;
        break;
      }
      check_var(t);
      image = multiply(image, static_cast<Monomial>(e) << shift(t));
    }
    if (!vanishes) out.emplace_back(image, c);
  }
  return from_terms(std::move(out));
}

Polynomial Polynomial::divide_by_difference(int i, int k) const {
  check_var(i);
  check_var(k);
  if (i == k) throw std::invalid_argument("divide_by_difference: identical variables");
  // Group terms by the exponents of the other variables and by D = e_i + e_k.
  // Within a group, P = (s - t) Q reads p_{a,D-a} = q_{a-1,D-a} - q_{a,D-a-1},
  // solved from a = D downwards; the a = 0 equation is the remainder check.
  const Monomial fields = (static_cast<Monomial>(kMaxExponent) << shift(i)) |
                          (static_cast<Monomial>(kMaxExponent) << shift(k));
  std::map<std::pair<Monomial, int>, std::vector<const Rational*>> groups;
  for (const auto& [m, c] : terms_) {
    const int a = exponent(m, i);
    const int total = a + exponent(m, k);
    auto& slot = groups[{m & ~fields, total}];
    if (slot.empty()) slot.resize(total + 1, nullptr);
    slot[a] = &c;
  }
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [key, p] : groups) {
    const auto& [rest, total] = key;
    if (total == 0) throw std::domain_error("divide_by_difference: nonzero remainder");
    Rational q;  // q_{a, D-1-a}, carried downwards
    for (int a = total; a >= 1; --a) {
      if (p[a]) q += *p[a];
      if (!fsf::is_zero(q))
        out.emplace_back(rest | (static_cast<Monomial>(a - 1) << shift(i)) |
                             (static_cast<Monomial>(total - a) << shift(k)),
                         q);
    }
    if (p[0]) q += *p[0];
    if (!fsf::is_zero(q)) throw std::domain_error("divide_by_difference: nonzero remainder");
  }
  return from_terms(std::move(out));
}

std::string Polynomial::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    std::string mono;
    for (int v = 0; v < kMaxVars; ++v) {
      const int e = exponent(m, v);
      if (!e) continue;
      if (!mono.empty()) mono += '*';
      mono += v < static_cast<int>(names.size()) ? names[v] : "v" + std::to_string(v);
      if (e > 1) mono += '^' + std::to_string(e);
    }
    const bool negative = sgn(c) < 0;
    const Rational magnitude = abs(c);
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    if (mono.empty()) {
      out += magnitude.get_str();
    } else {
      if (magnitude != 1) out += magnitude.get_str() + '*';
      out += mono;
    }
  }
  return out;
}

void PolynomialAccumulator::add(Polynomial::Monomial m, const Rational& c) { pending_.emplace_back(m, c); }

void PolynomialAccumulator::add(const Polynomial& p, const Rational& scale) {
  if (fsf::is_zero(scale)) return;
  for (const auto& [m, c] : p.terms()) pending_.emplace_back(m, c * scale);
  // Keep memory bounded on long reductions.
  if (pending_.size() > (std::size_t{1} << 20)) {
    Polynomial partial = Polynomial::from_terms(std::move(pending_));
    pending_ = partial.terms();
  }
}

Polynomial PolynomialAccumulator::take() {
  Polynomial p = Polynomial::from_terms(std::move(pending_));
  pending_.clear();
  return p;
}

}  // namespace fsf
