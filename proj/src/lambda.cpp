#include "fsf/lambda.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <mutex>
#include <stdexcept>

#include "fsf/linalg.hpp"

namespace fsf {

namespace {

// Bit layout of a key: the multiplicity of h_k sits in a field wide enough
// for kMaxDegree / k, and the total degree occupies the top bits. Adding
// two keys multiplies the monomials as long as the degree stays in range.
struct KeyLayout {
  std::array<int, LambdaElement::kMaxDegree + 1> offset{};
  std::array<int, LambdaElement::kMaxDegree + 1> width{};
  KeyLayout() {
    int next = 0;
    for (int k = 1; k <= LambdaElement::kMaxDegree; ++k) {
      width[k] = std::bit_width(static_cast<unsigned>(LambdaElement::kMaxDegree / k));
      offset[k] = next;
      next += width[k];
    }
  }
};

const KeyLayout& layout() {
  static const KeyLayout l;
  return l;
}

bool key_less(const LambdaElement::Term& a, const LambdaElement::Term& b) { return a.first < b.first; }

std::vector<LambdaElement::Term> combine_sorted(std::vector<LambdaElement::Term> terms) {
  std::sort(terms.begin(), terms.end(), key_less);
  std::vector<LambdaElement::Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().first == t.first) {
      out.back().second += t.second;
      if (is_zero(out.back().second)) out.pop_back();
    } else if (!is_zero(t.second)) {
      out.push_back(std::move(t));
    }
  }
  return out;
}

}  // namespace

LambdaElement::LambdaElement(const Rational& c) {
  if (!fsf::is_zero(c)) terms_.emplace_back(0, c);
}

LambdaElement LambdaElement::h(int k) {
  if (k < 0) return {};
  if (k == 0) return LambdaElement(1);
  return h_monomial(Partition{k});
}

LambdaElement LambdaElement::h_monomial(const Partition& lambda, const Rational& coeff) {
  LambdaElement f;
  if (!fsf::is_zero(coeff)) f.terms_.emplace_back(encode(lambda), coeff);
  return f;
}

LambdaElement::Key LambdaElement::encode(const Partition& lambda) {
  const int d = lambda.size();
  if (d > kMaxDegree)
    throw std::overflow_error("symmetric function degree " + std::to_string(d) + " exceeds supported maximum " +
                              std::to_string(kMaxDegree));
  Key key = static_cast<Key>(d) << kDegreeShift;
  for (int part : lambda.parts()) key += Key{1} << layout().offset[part];
  return key;
}

Partition LambdaElement::decode(Key key) {
  std::vector<int> parts;
  for (int k = kMaxDegree; k >= 1; --k) {
    const Key mask = (Key{1} << layout().width[k]) - 1;
    const int m = static_cast<int>((key >> layout().offset[k]) & mask);
    parts.insert(parts.end(), m, k);
  }
  return Partition(std::move(parts));
}

LambdaElement LambdaElement::truncated(int d) const {
  LambdaElement f;
  f.trunc_ = std::min(d, trunc_);
  for (const auto& t : terms_)
    if (key_degree(t.first) <= f.trunc_) f.terms_.push_back(t);
  return f;
}

int LambdaElement::degree() const {
  // Keys sort by degree first, so the last term has the top degree.
  return terms_.empty() ? -1 : key_degree(terms_.back().first);
}

LambdaElement LambdaElement::homogeneous_component(int d) const {
  LambdaElement f;
  f.trunc_ = trunc_;
  for (const auto& t : terms_)
    if (key_degree(t.first) == d) f.terms_.push_back(t);
  return f;
}

Rational LambdaElement::coefficient(const Partition& lambda) const {
  if (lambda.size() > kMaxDegree) return 0;
  const Key key = encode(lambda);
  auto it = std::lower_bound(terms_.begin(), terms_.end(), Term{key, 0}, key_less);
  return it != terms_.end() && it->first == key ? it->second : Rational(0);
}

std::map<Partition, Rational, SizeThenReverseLex> LambdaElement::terms() const {
  std::map<Partition, Rational, SizeThenReverseLex> out;
  for (const auto& [key, c] : terms_) out.emplace(decode(key), c);
  return out;
}

LambdaElement LambdaElement::operator-() const {
  LambdaElement f = *this;
  for (auto& t : f.terms_) t.second = -t.second;
  return f;
}

namespace {

template <class Sign>
std::vector<LambdaElement::Term> merge_terms(const std::vector<LambdaElement::Term>& a,
                                             const std::vector<LambdaElement::Term>& b, int trunc, Sign sign) {
  std::vector<LambdaElement::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  auto keep = [&](LambdaElement::Key k) { return LambdaElement::key_degree(k) <= trunc; };
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      if (keep(a[i].first)) out.push_back(a[i]);
      ++i;
    } else if (i == a.size() || b[j].first < a[i].first) {
      if (keep(b[j].first)) out.emplace_back(b[j].first, sign(b[j].second));
      ++j;
    } else {
      Rational c = a[i].second + sign(b[j].second);
      if (keep(a[i].first) && !is_zero(c)) out.emplace_back(a[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

LambdaElement& LambdaElement::operator+=(const LambdaElement& o) {
  trunc_ = std::min(trunc_, o.trunc_);
  terms_ = merge_terms(terms_, o.terms_, trunc_, [](const Rational& c) { return c; });
  return *this;
}

LambdaElement& LambdaElement::operator-=(const LambdaElement& o) {
  trunc_ = std::min(trunc_, o.trunc_);
  terms_ = merge_terms(terms_, o.terms_, trunc_, [](const Rational& c) { return Rational(-c); });
  return *this;
}

LambdaElement& LambdaElement::operator*=(const Rational& c) {
  if (fsf::is_zero(c)) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= c;
  return *this;
}

LambdaElement operator*(const LambdaElement& a, const LambdaElement& b) {
  LambdaElement f;
  f.trunc_ = std::min(a.trunc_, b.trunc_);
  if (a.is_zero() || b.is_zero()) return f;
  std::vector<LambdaElement::Term> out;
  out.reserve(a.terms_.size() * b.terms_.size());
  // Terms are sorted by degree, so the inner loop can stop early.
  for (const auto& [ka, ca] : a.terms_) {
    const int da = LambdaElement::key_degree(ka);
    if (da > f.trunc_) break;
    for (const auto& [kb, cb] : b.terms_) {
      const int d = da + LambdaElement::key_degree(kb);
      if (d > f.trunc_) break;
      if (d > LambdaElement::kMaxDegree)
        throw std::overflow_error("symmetric function product degree " + std::to_string(d) +
                                  " exceeds supported maximum");
      out.emplace_back(ka + kb, ca * cb);
    }
  }
  f.terms_ = combine_sorted(std::move(out));
  return f;
}

std::string LambdaElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [lambda, c] : terms()) {
    std::string mono;
    const auto& parts = lambda.parts();
    for (std::size_t i = 0; i < parts.size();) {
      std::size_t j = i;
      while (j < parts.size() && parts[j] == parts[i]) ++j;
      if (!mono.empty()) mono += '*';
      mono += "h" + std::to_string(parts[i]);
      if (j - i > 1) mono += "^" + std::to_string(j - i);
      i = j;
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

LambdaElement h_gen(int k) { return LambdaElement::h(k); }

namespace {

// Lazily extended tables shared across threads.
struct GeneratorTables {
  std::mutex mutex;
  std::vector<LambdaElement> e{LambdaElement(1)};
  std::vector<LambdaElement> p{LambdaElement(0)};
  std::map<Partition, LambdaElement> schur;
  std::map<int, RationalMatrix> schur_inverse;  // per degree: h-coords -> s-coords
};

GeneratorTables& tables() {
  static GeneratorTables t;
  return t;
}

}  // namespace

LambdaElement e_gen(int k) {
  if (k < 0) return {};
  auto& t = tables();
  std::lock_guard lock(t.mutex);
  // e_k = sum_{j=1}^k (-1)^{j-1} h_j e_{k-j}, the coefficient form of
  // H(u)E(-u) = 1.
  while (static_cast<int>(t.e.size()) <= k) {
    const int n = static_cast<int>(t.e.size());
    LambdaElement next;
    for (int j = 1; j <= n; ++j) {
      LambdaElement term = LambdaElement::h(j) * t.e[n - j];
      if (j % 2) next += term;
      else next -= term;
    }
    t.e.push_back(std::move(next));
  }
  return t.e[k];
}

LambdaElement power_sum(int k) {
  if (k < 1) throw std::invalid_argument("power_sum index must be positive");
  auto& t = tables();
  std::lock_guard lock(t.mutex);
  // p_n = n h_n - sum_{i=1}^{n-1} p_i h_{n-i}.
  while (static_cast<int>(t.p.size()) <= k) {
    const int n = static_cast<int>(t.p.size());
    LambdaElement next = Rational(n) * LambdaElement::h(n);
    for (int i = 1; i < n; ++i) next -= t.p[i] * LambdaElement::h(n - i);
    t.p.push_back(std::move(next));
  }
  return t.p[k];
}

LambdaElement schur(const Partition& mu) {
  auto& t = tables();
  {
    std::lock_guard lock(t.mutex);
    auto it = t.schur.find(mu);
    if (it != t.schur.end()) return it->second;
  }
  const int l = mu.length();
  std::vector<std::vector<LambdaElement>> m(l, std::vector<LambdaElement>(l));
  for (int i = 1; i <= l; ++i)
    for (int j = 1; j <= l; ++j) m[i - 1][j - 1] = LambdaElement::h(mu.row(i) - i + j);
  LambdaElement s = ring_determinant(m, LambdaElement(1));
  std::lock_guard lock(t.mutex);
  t.schur.emplace(mu, s);
  return s;
}

namespace {

const RationalMatrix& schur_inverse(int d) {
  auto& t = tables();
  {
    std::lock_guard lock(t.mutex);
    auto it = t.schur_inverse.find(d);
    if (it != t.schur_inverse.end()) return it->second;
  }
  const auto parts = partitions_of(d);
  const std::size_t n = parts.size();
  RationalMatrix m(n, std::vector<Rational>(n));
  for (std::size_t col = 0; col < n; ++col) {
    const LambdaElement s = schur(parts[col]);
    for (std::size_t row = 0; row < n; ++row) m[row][col] = s.coefficient(parts[row]);
  }
  RationalMatrix inv = inverse(std::move(m));
  std::lock_guard lock(t.mutex);
  return t.schur_inverse.emplace(d, std::move(inv)).first->second;
}

}  // namespace

SchurExpansion expand_in_schur(const LambdaElement& f) {
  SchurExpansion out;
  const int top = f.degree();
  for (int d = 0; d <= top; ++d) {
    const LambdaElement part = f.homogeneous_component(d);
    if (part.is_zero()) continue;
    const auto parts = partitions_of(d);
    const RationalMatrix& inv = schur_inverse(d);
    std::vector<Rational> h_coords(parts.size());
    for (std::size_t i = 0; i < parts.size(); ++i) h_coords[i] = part.coefficient(parts[i]);
    for (std::size_t i = 0; i < parts.size(); ++i) {
      Rational c = 0;
      for (std::size_t j = 0; j < parts.size(); ++j)
        if (!is_zero(h_coords[j])) c += inv[i][j] * h_coords[j];
      if (!is_zero(c)) out.emplace(parts[i], c);
    }
  }
  return out;
}

LambdaElement from_schur(const SchurExpansion& expansion) {
  LambdaElement f;
  for (const auto& [nu, c] : expansion) f += c * schur(nu);
  return f;
}

LambdaElement omega(const LambdaElement& f) {
  LambdaElement out;
  for (const auto& [key, c] : f.raw_terms()) {
    LambdaElement image(c);
    const Partition monomial = LambdaElement::decode(key);
    for (int part : monomial.parts()) image = image * e_gen(part);
    out += image;
  }
  return out.truncated(f.trunc_degree());
}

LambdaElement t_shift_h(int k, const Rational& r) {
  // Coefficient of u^{-k} in H(u - r) = 1 + sum_j h_j (u - r)^{-j}:
  // sum_{j=1}^k C(k-1, k-j) r^{k-j} h_j.
  if (k <= 0) return LambdaElement::h(k);
  LambdaElement out;
  Integer binom = 1;  // C(k-1, k-j), updated as j decreases
  Rational rp = 1;
  for (int j = k; j >= 1; --j) {
    out += Rational(binom) * rp * LambdaElement::h(j);
    // Move to j-1: C(k-1, k-j+1) = C(k-1, k-j) * (j-1) / (k-j+1).
    binom = binom * (j - 1) / (k - j + 1);
    rp *= r;
  }
  return out;
}

LambdaElement t_shift(const LambdaElement& f, const Rational& r) {
  std::map<int, LambdaElement> images;
  LambdaElement out;
  for (const auto& [key, c] : f.raw_terms()) {
    LambdaElement image(c);
    const Partition monomial = LambdaElement::decode(key);
    for (int part : monomial.parts()) {
      auto it = images.find(part);
      if (it == images.end()) it = images.emplace(part, t_shift_h(part, r)).first;
      image = image * it->second;
    }
    out += image;
  }
  return out.truncated(f.trunc_degree());
}

Integer char_value(const Partition& nu, const Partition& rho) {
  if (nu.size() != rho.size())
    throw std::invalid_argument("char_value: |nu| = " + std::to_string(nu.size()) + " but |rho| = " +
                                std::to_string(rho.size()));
  LambdaElement p_rho(1);
  for (int part : rho.parts()) p_rho = p_rho * power_sum(part);
  const auto expansion = expand_in_schur(p_rho);
  auto it = expansion.find(nu);
  if (it == expansion.end()) return 0;
  if (it->second.get_den() != 1) throw std::logic_error("non-integral character value");
  return it->second.get_num();
}

TruncatedSeries<LambdaElement> H_series(int order) {
  TruncatedSeries<LambdaElement> s(order);
  for (int k = 0; k <= order; ++k) s[k] = LambdaElement::h(k);
  return s;
}

TruncatedSeries<LambdaElement> E_series(int order) {
  TruncatedSeries<LambdaElement> s(order);
  for (int k = 0; k <= order; ++k) s[k] = e_gen(k);
  return s;
}

Rational evaluate_h(const LambdaElement& f, const std::vector<Rational>& h_values) {
  Rational total = 0;
  for (const auto& [key, c] : f.raw_terms()) {
    Rational t = c;
    const Partition monomial = LambdaElement::decode(key);
    for (int part : monomial.parts()) {
      if (part >= static_cast<int>(h_values.size()))
        throw std::out_of_range("evaluate_h: missing value for h_" + std::to_string(part));
      t *= h_values[part];
    }
    total += t;
  }
  return total;
}

}  // namespace fsf
