#include "fsf/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "fsf/linalg.hpp"

namespace fsf {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  std::string token;
  std::istringstream in{std::string(text)};
  while (std::getline(in, token, ',')) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed partition '" + std::string(text) + "'");
    }
    if (used != token.size()) throw std::invalid_argument("malformed partition '" + std::string(text) + "'");
    parts.push_back(value);
  }
  return Partition(std::move(parts));
}

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::column(int j) const {
  if (j < 1) return 0;
  int n = 0;
  while (n < length() && parts_[n] >= j) ++n;
  return n;
}

int Partition::depth() const {
  int d = 0;
  while (d < length() && parts_[d] >= d + 1) ++d;
  return d;
}

Partition Partition::conjugate() const {
  std::vector<int> out;
  const int first = row(1);
  out.reserve(first);
  for (int j = 1; j <= first; ++j) out.push_back(column(j));
  return Partition(std::move(out));
}

bool SizeThenReverseLex::operator()(const Partition& a, const Partition& b) const {
  if (a.size() != b.size()) return a.size() > b.size();
  return a.parts() > b.parts();
}

FrobeniusCoords frobenius(const Partition& mu) {
  FrobeniusCoords c;
  const int d = mu.depth();
  for (int i = 1; i <= d; ++i) {
    c.p.push_back(mu.row(i) - i);
    c.q.push_back(mu.column(i) - i);
  }
  return c;
}

Partition from_frobenius(const FrobeniusCoords& c) {
  if (c.p.size() != c.q.size()) throw std::invalid_argument("Frobenius coordinates must have equal length");
  const int d = c.depth();
  for (int i = 0; i < d; ++i) {
    if (c.p[i] < 0 || c.q[i] < 0) throw std::invalid_argument("Frobenius coordinates must be nonnegative");
    if (i > 0 && (c.p[i] >= c.p[i - 1] || c.q[i] >= c.q[i - 1]))
      throw std::invalid_argument("Frobenius coordinates must be strictly decreasing");
  }
  // Rows 1..d come from the arms; rows below the diagonal are read off the legs.
  const int rows = d == 0 ? 0 : c.q[0] + 1;
  std::vector<int> parts(rows, 0);
  for (int i = 1; i <= d; ++i) parts[i - 1] = c.p[i - 1] + i;
  for (int j = 1; j <= d; ++j)
    for (int i = j + 1; i <= c.q[j - 1] + j; ++i) parts[i - 1] = std::max(parts[i - 1], j);
  return Partition(std::move(parts));
}

bool contains(const Partition& mu, const Partition& nu) {
  if (mu.length() > nu.length()) return false;
  for (int i = 1; i <= mu.length(); ++i)
    if (mu.row(i) > nu.row(i)) return false;
  return true;
}

SkewShape::SkewShape(Partition outer, Partition inner) : outer_(std::move(outer)), inner_(std::move(inner)) {
  if (!contains(inner_, outer_))
    throw std::invalid_argument("skew shape " + outer_.to_string() + "/" + inner_.to_string() + ": inner not contained in outer");
}

SkewShape SkewShape::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return SkewShape(Partition::parse(text));
  return SkewShape(Partition::parse(text.substr(0, slash)), Partition::parse(text.substr(slash + 1)));
}

std::string SkewShape::to_string() const { return outer_.to_string() + "/" + inner_.to_string(); }

std::vector<Cell> SkewShape::cells() const {
  std::vector<Cell> out;
  for (int i = 1; i <= outer_.length(); ++i)
    for (int j = inner_.row(i) + 1; j <= outer_.row(i); ++j) out.push_back({i, j});
  return out;
}

bool SkewShape::has_2x2_block() const {
  for (int i = 1; i < outer_.length(); ++i)
    if (outer_.row(i + 1) >= inner_.row(i) + 2) return true;
  return false;
}

int SkewShape::components() const {
  // Union-find over cells in row-major order.
  const auto cs = cells();
  std::map<Cell, int> index;
  for (std::size_t k = 0; k < cs.size(); ++k) index[cs[k]] = static_cast<int>(k);
  std::vector<int> parent(cs.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int count = static_cast<int>(cs.size());
  for (const auto& c : cs) {
    for (const Cell& nb : {Cell{c.row, c.col + 1}, Cell{c.row + 1, c.col}}) {
      auto it = index.find(nb);
      if (it == index.end()) continue;
      int ra = find(index[c]), rb = find(it->second);
      if (ra != rb) {
        parent[ra] = rb;
        --count;
      }
    }
  }
  return count;
}

int hook_length(const Partition& mu, int i, int j) { return mu.row(i) - i + mu.column(j) - j + 1; }

std::map<Cell, int> hook_lengths(const Partition& mu) {
  std::map<Cell, int> out;
  for (const auto& c : SkewShape(mu).cells()) out[c] = hook_length(mu, c.row, c.col);
  return out;
}

std::map<Cell, int> contents(const SkewShape& shape) {
  std::map<Cell, int> out;
  for (const auto& c : shape.cells()) out[c] = content(c);
  return out;
}

Rational factorial(int k) {
  Integer f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return Rational(f);
}

namespace {

// 1/k! with the Gamma convention 1/k! = 0 for negative k.
Rational inverse_factorial(int k) { return k < 0 ? Rational(0) : Rational(1) / factorial(k); }

// Counts saturated chains mu = lambda^0 < ... < lambda^k = nu by removing
// corners of nu one at a time.
Integer count_chains(const Partition& mu, const Partition& nu) {
  if (nu == mu) return 1;
  Integer total = 0;
  std::vector<int> parts = nu.parts();
  for (int i = 1; i <= nu.length(); ++i) {
    // (i, nu_i) is a removable corner when the next row is strictly shorter.
    if (nu.row(i) > nu.row(i + 1) && nu.row(i) > mu.row(i)) {
      parts[i - 1] -= 1;
      total += count_chains(mu, Partition(parts));
      parts[i - 1] += 1;
    }
  }
  return total;
}

void check_brute_cap(int k) {
  if (k > kBruteForceCap)
    throw std::domain_error("brute-force chain enumeration capped at " + std::to_string(kBruteForceCap) +
                            " cells, got " + std::to_string(k));
}

Integer to_integer(const Rational& r) {
  if (r.get_den() != 1) throw std::logic_error("expected an integral determinant value, got " + r.get_str());
  return r.get_num();
}

}  // namespace

Integer dim(const Partition& nu, DimMethod method) {
  switch (method) {
    case DimMethod::brute:
      check_brute_cap(nu.size());
      return count_chains(Partition{}, nu);
    case DimMethod::hook: {
      Rational prod = 1;
      for (const auto& [cell, h] : hook_lengths(nu)) prod *= h;
      return to_integer(factorial(nu.size()) / prod);
    }
    case DimMethod::determinant:
      return dim_skew(Partition{}, nu, SkewDimMethod::determinant);
  }
  throw std::logic_error("unknown DimMethod");
}

Integer dim_skew(const Partition& mu, const Partition& nu, SkewDimMethod method) {
  if (method == SkewDimMethod::brute) {
    if (!contains(mu, nu)) return 0;
    check_brute_cap(nu.size() - mu.size());
    return count_chains(mu, nu);
  }
  const int gap = nu.size() - mu.size();
  if (gap < 0) return 0;
  const int l = std::max(mu.length(), nu.length());
  if (l == 0) return 1;
  std::vector<std::vector<Rational>> m(l, std::vector<Rational>(l));
  for (int i = 1; i <= l; ++i)
    for (int j = 1; j <= l; ++j) m[i - 1][j - 1] = inverse_factorial(nu.row(i) - mu.row(j) - i + j);
  return to_integer(factorial(gap) * determinant(std::move(m)));
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> current;
  // Depth-first with parts bounded by the previous part, largest first.
  auto rec = [&](auto&& self, int remaining, int bound) -> void {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int part = std::min(remaining, bound); part >= 1; --part) {
      current.push_back(part);
      self(self, remaining - part, part);
      current.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

std::vector<Partition> partitions_up_to(int n) {
  std::vector<Partition> out;
  for (int k = 0; k <= n; ++k) {
    auto ps = partitions_of(k);
    out.insert(out.end(), ps.begin(), ps.end());
  }
  return out;
}

std::vector<Partition> partitions_in_box(int rows, int cols) {
  std::vector<Partition> out;
  for (const auto& p : partitions_up_to(rows * cols))
    if (p.length() <= rows && p.row(1) <= cols) out.push_back(p);
  return out;
}

}  // namespace fsf
