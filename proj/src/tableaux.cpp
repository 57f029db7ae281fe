#include "fsf/tableaux.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "fsf/linalg.hpp"
#include "fsf/multiparam.hpp"

namespace fsf {

std::string symbol_to_string(int symbol) {
  if (symbol < 1) throw std::invalid_argument("alphabet symbols start at 1'");
  return std::to_string(symbol_level(symbol)) + (is_primed(symbol) ? "'" : "");
}

int Filling::at(int row, int col) const {
  if (!shape.has_cell(row, col))
    throw std::out_of_range("cell (" + std::to_string(row) + "," + std::to_string(col) + ") is not in " +
                            shape.to_string());
  int index = 0;
  for (int r = 1; r < row; ++r) index += shape.outer().row(r) - shape.inner().row(r);
  return entries.at(index + col - shape.inner().row(row) - 1);
}

namespace {

std::string filling_rows(const Filling& f, const std::function<std::string(int)>& show) {
  std::string out;
  std::size_t k = 0;
  for (int i = 1; i <= f.shape.outer().length(); ++i) {
    if (i > 1) out += "/";
    for (int j = 1; j <= f.shape.outer().row(i); ++j) {
      if (j > 1) out += " ";
      out += f.shape.has_cell(i, j) ? show(f.entries.at(k++)) : std::string(".");
    }
  }
  return out;
}

}  // namespace

std::vector<Partition> DiagonalStrictTableau::chain(int n) const {
  const int rows = shape.outer().length();
  std::vector<Partition> out;
  for (int level = 0; level <= n; ++level) {
    std::vector<int> parts(rows);
    std::size_t k = 0;
    for (int i = 1; i <= rows; ++i) {
      parts[i - 1] = shape.inner().row(i);
      for (int j = shape.inner().row(i) + 1; j <= shape.outer().row(i); ++j)
        if (entries.at(k++) <= level) ++parts[i - 1];
    }
    out.emplace_back(std::move(parts));
  }
  return out;
}

std::string DiagonalStrictTableau::to_string() const {
  return filling_rows(*this, [](int e) { return std::to_string(e); });
}

DiagonalStrictTableau PrimedTableau::unprimed() const {
  DiagonalStrictTableau t;
  t.shape = shape;
  for (int s : entries) t.entries.push_back(symbol_level(s));
  return t;
}

std::string PrimedTableau::to_string() const { return filling_rows(*this, symbol_to_string); }

namespace {

// Map from cell to entry for checks that walk neighbours.
std::map<Cell, int> entry_map(const Filling& f) {
  const auto cells = f.shape.cells();
  if (cells.size() != f.entries.size()) throw std::invalid_argument("filling has the wrong number of entries");
  std::map<Cell, int> out;
  for (std::size_t k = 0; k < cells.size(); ++k) out[cells[k]] = f.entries[k];
  return out;
}

}  // namespace

bool is_diagonal_strict(const DiagonalStrictTableau& t, int n) {
  if (t.shape.cells().size() != t.entries.size()) return false;
  const auto e = entry_map(t);
  for (const auto& [c, v] : e) {
    if (v < 1 || v > n) return false;
    auto right = e.find({c.row, c.col + 1});
    if (right != e.end() && right->second < v) return false;
    auto below = e.find({c.row + 1, c.col});
    if (below != e.end() && below->second < v) return false;
    auto diag = e.find({c.row + 1, c.col + 1});
    if (diag != e.end() && diag->second <= v) return false;
  }
  return true;
}

bool is_primed_tableau(const PrimedTableau& t, int n) {
  if (t.shape.cells().size() != t.entries.size()) return false;
  const auto e = entry_map(t);
  for (const auto& [c, v] : e) {
    if (v < 1 || v > unprimed_symbol(n)) return false;
    auto right = e.find({c.row, c.col + 1});
    if (right != e.end() && (right->second < v || (right->second == v && is_primed(v)))) return false;
    auto below = e.find({c.row + 1, c.col});
    if (below != e.end() && (below->second < v || (below->second == v && !is_primed(v)))) return false;
  }
  // Equal neighbours are the only way to repeat a symbol within a row or
  // column, since entries are monotone.
  return true;
}

namespace {

// f_{nu;a}(u, v) over any ring with T(Rational).
template <class T>
T hook_weight(const SkewShape& nu, const ParameterSequence& a, const T& u, const T& v) {
  if (nu.has_2x2_block()) throw std::invalid_argument("skew_hook_weight: " + nu.to_string() + " has a 2x2 block");
  T out(Rational(1));
  const T u_plus_v = u + v;
  for (int c = nu.components(); c > 0; --c) out = out * u_plus_v;
  const Rational half(1, 2);
  for (const Cell& c : nu.cells()) {
    if (nu.has_cell(c.row, c.col + 1)) {
      // Vertical side between (i,j) and (i,j+1), midpoint (i - 1/2, j).
      const Rational eps = Rational(c.row) - half, delta = c.col;
      out = out * (u - T(a.primed(delta - eps)));
    }
    if (nu.has_cell(c.row + 1, c.col)) {
      // Horizontal side between (i,j) and (i+1,j), midpoint (i, j - 1/2).
      const Rational eps = c.row, delta = Rational(c.col) - half;
      out = out * (v + T(a.primed(delta - eps)));
    }
  }
  return out;
}

// Next levels of a chain: partitions nu with cur <= nu <= outer and nu/cur
// free of 2x2 blocks, i.e. nu_{r+1} <= cur_r + 1.
void next_levels(const std::vector<int>& cur, const std::vector<int>& outer,
                 const std::function<void(const std::vector<int>&)>& visit) {
  const int rows = static_cast<int>(outer.size());
  std::vector<int> nu(rows);
  auto rec = [&](auto&& self, int r) -> void {
    if (r == rows) {
      visit(nu);
      return;
    }
    int hi = outer[r];
    if (r > 0) hi = std::min({hi, nu[r - 1], cur[r - 1] + 1});
    for (int v = cur[r]; v <= hi; ++v) {
      nu[r] = v;
      self(self, r + 1);
    }
  };
  rec(rec, 0);
}

std::vector<int> padded(const Partition& p, int rows) {
  std::vector<int> out(rows);
  for (int i = 1; i <= rows; ++i) out[i - 1] = p.row(i);
  return out;
}

// Row offsets into the row-major entry vector.
std::vector<int> row_offsets(const SkewShape& shape) {
  const int rows = shape.outer().length();
  std::vector<int> off(rows + 1, 0);
  for (int i = 1; i <= rows; ++i) off[i] = off[i - 1] + shape.outer().row(i) - shape.inner().row(i);
  return off;
}

// Walks all chains inner = nu^0 <= ... <= nu^n = outer with strip steps;
// on_level(i, cur, next) returns false to prune.
template <class OnLevel, class OnLeaf, class OnLeave>
void walk_chains(const SkewShape& shape, int n, OnLevel&& on_level, OnLeaf&& on_leaf, OnLeave&& on_leave) {
  const int rows = shape.outer().length();
  const std::vector<int> outer = padded(shape.outer(), rows);
  auto rec = [&](auto&& self, int level, const std::vector<int>& cur) -> void {
    if (level > n) {
      if (cur == outer) on_leaf();
      return;
    }
    next_levels(cur, outer, [&](const std::vector<int>& nu) {
      if (level == n && nu != outer) return;
      if (!on_level(level, cur, nu)) return;
      self(self, level + 1, nu);
      on_leave(level, cur, nu);
    });
  };
  rec(rec, 1, padded(shape.inner(), rows));
}

SkewShape strip(const std::vector<int>& cur, const std::vector<int>& nu) { return {Partition(nu), Partition(cur)}; }

}  // namespace

Polynomial skew_hook_weight(const SkewShape& nu, const ParameterSequence& a) {
  return hook_weight(nu, a, Polynomial::variable(0), Polynomial::variable(1));
}

Rational skew_hook_weight_at(const SkewShape& nu, const ParameterSequence& a, const Rational& u, const Rational& v) {
  return hook_weight(nu, a, u, v);
}

void for_each_diagonal_strict(const SkewShape& shape, int n,
                              const std::function<void(const DiagonalStrictTableau&)>& visit) {
  if (n < 0) throw std::invalid_argument("tableau order must be nonnegative");
  if (n == 0) {
    if (shape.size() == 0) visit(DiagonalStrictTableau{{shape, {}}});
    return;
  }
  const auto off = row_offsets(shape);
  const auto inner = padded(shape.inner(), shape.outer().length());
  DiagonalStrictTableau t;
  t.shape = shape;
  t.entries.assign(shape.size(), 0);
  walk_chains(
      shape, n,
      [&](int level, const std::vector<int>& cur, const std::vector<int>& nu) {
        for (std::size_t r = 0; r < nu.size(); ++r)
          for (int j = cur[r]; j < nu[r]; ++j) t.entries[off[r] + j - inner[r]] = level;
        return true;
      },
      [&]() { visit(t); }, [](int, const std::vector<int>&, const std::vector<int>&) {});
}

std::vector<DiagonalStrictTableau> enumerate_diagonal_strict(const SkewShape& shape, int n) {
  std::vector<DiagonalStrictTableau> out;
  for_each_diagonal_strict(shape, n, [&](const DiagonalStrictTableau& t) { out.push_back(t); });
  return out;
}

std::vector<PrimedTableau> primed_lifts(const DiagonalStrictTableau& t) {
  const auto cells = t.shape.cells();
  // Components of each level set, each sorted by increasing content.
  std::map<Cell, int> index;
  for (std::size_t k = 0; k < cells.size(); ++k) index[cells[k]] = static_cast<int>(k);
  std::vector<int> parent(cells.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t k = 0; k < cells.size(); ++k)
    for (const Cell nb : {Cell{cells[k].row, cells[k].col + 1}, Cell{cells[k].row + 1, cells[k].col}}) {
      auto it = index.find(nb);
      if (it != index.end() && t.entries[it->second] == t.entries[k]) parent[find(it->second)] = find(static_cast<int>(k));
    }
  std::map<int, std::vector<int>> groups;
  for (std::size_t k = 0; k < cells.size(); ++k) groups[find(static_cast<int>(k))].push_back(static_cast<int>(k));
  std::vector<std::vector<int>> components;
  for (auto& [root, members] : groups) {
    std::sort(members.begin(), members.end(), [&](int p, int q) { return content(cells[p]) < content(cells[q]); });
    components.push_back(std::move(members));
  }

  PrimedTableau base;
  base.shape = t.shape;
  base.entries.assign(cells.size(), 0);
  for (const auto& comp : components) {
    for (std::size_t r = 1; r < comp.size(); ++r) {
      const Cell prev = cells[comp[r - 1]], here = cells[comp[r]];
      const int level = t.entries[comp[r]];
      // Consecutive contents in a skew hook step right or up.
      base.entries[comp[r]] = prev.row == here.row ? unprimed_symbol(level) : primed_symbol(level);
    }
  }
  std::vector<PrimedTableau> out;
  const std::size_t count = std::size_t{1} << components.size();
  for (std::size_t mask = 0; mask < count; ++mask) {
    PrimedTableau lift = base;
    for (std::size_t c = 0; c < components.size(); ++c) {
      const int first = components[c].front();
      const int level = t.entries[first];
      lift.entries[first] = (mask >> c) & 1 ? primed_symbol(level) : unprimed_symbol(level);
    }
    out.push_back(std::move(lift));
  }
  return out;
}

void for_each_primed(const SkewShape& shape, int n, const std::function<void(const PrimedTableau&)>& visit) {
  for_each_diagonal_strict(shape, n, [&](const DiagonalStrictTableau& t) {
    for (const auto& lift : primed_lifts(t)) visit(lift);
  });
}

std::vector<PrimedTableau> enumerate_primed(const SkewShape& shape, int n) {
  std::vector<PrimedTableau> out;
  for_each_primed(shape, n, [&](const PrimedTableau& t) { out.push_back(t); });
  return out;
}

std::uint64_t count_diagonal_strict(const SkewShape& shape, int n) {
  std::uint64_t count = 0;
  for_each_diagonal_strict(shape, n, [&](const DiagonalStrictTableau&) { ++count; });
  return count;
}

std::uint64_t count_primed(const SkewShape& shape, int n) {
  std::uint64_t count = 0;
  for_each_diagonal_strict(shape, n,
                           [&](const DiagonalStrictTableau& t) { count += primed_lifts(t).size(); });
  return count;
}

Rational tableau_weight(const DiagonalStrictTableau& t, const ParameterSequence& a, const EvalPoint& pt) {
  const int n = pt.n();
  if (!is_diagonal_strict(t, n)) throw std::invalid_argument("tableau_weight: not a diagonal-strict tableau of order n");
  const auto chain = t.chain(n);
  Rational w = 1;
  for (int i = 1; i <= n; ++i) {
    const SkewShape level(chain[i], chain[i - 1]);
    if (level.size() > 0) w *= skew_hook_weight_at(level, a, pt.x[i - 1], pt.y[i - 1]);
  }
  return w;
}

Rational tableau_weight(const PrimedTableau& t, const ParameterSequence& a, const EvalPoint& pt) {
  if (!is_primed_tableau(t, pt.n())) throw std::invalid_argument("tableau_weight: not a primed tableau of order n");
  const auto cells = t.shape.cells();
  Rational w = 1;
  for (std::size_t k = 0; k < cells.size(); ++k) {
    const int s = t.entries[k], level = symbol_level(s);
    const Rational ac = a[content(cells[k])];
    w *= is_primed(s) ? Rational(pt.y[level - 1] + ac) : Rational(pt.x[level - 1] - ac);
  }
  return w;
}

namespace {

template <class T>
T strip_sum(const SkewShape& shape, const ParameterSequence& a, const std::vector<T>& xs, const std::vector<T>& ys) {
  const int n = static_cast<int>(xs.size());
  if (n == 0) return T(Rational(shape.size() == 0 ? 1 : 0));
  T total(Rational(0));
  std::vector<T> running(n + 1, T(Rational(1)));
  walk_chains(
      shape, n,
      [&](int level, const std::vector<int>& cur, const std::vector<int>& nu) {
        const SkewShape s = strip(cur, nu);
        running[level] = s.size() == 0 ? running[level - 1]
                                       : running[level - 1] * hook_weight(s, a, xs[level - 1], ys[level - 1]);
        return true;
      },
      [&]() { total = total + running[n]; }, [](int, const std::vector<int>&, const std::vector<int>&) {});
  return total;
}

// x_k - a_c and y_k + a_c for every level k and every content c of the
// shape (contents double as path abscissas).
template <class T>
struct CellFactors {
  int lo = 0;
  int width = 0;
  std::vector<T> x, y;

  CellFactors(const SkewShape& shape, const ParameterSequence& a, const std::vector<T>& xs, const std::vector<T>& ys) {
    const int rows = std::max(shape.outer().length(), 1);
    lo = 1 - rows;
    width = std::max(shape.outer().row(1) - 1, lo) - lo + 1;
    for (std::size_t k = 0; k < xs.size(); ++k)
      for (int c = lo; c < lo + width; ++c) {
        const T ac(a[c]);
        x.push_back(xs[k] - ac);
        y.push_back(ys[k] + ac);
      }
  }
  const T& xf(int k, int c) const { return x[static_cast<std::size_t>(k - 1) * width + (c - lo)]; }
  const T& yf(int k, int c) const { return y[static_cast<std::size_t>(k - 1) * width + (c - lo)]; }
};

// Sum over primed fillings of each level set. A row of the level set reads
// k...k or k'k...k; down a column k' may repeat but k comes at most once and
// last, so a row whose cells sit above cells of the same level must start
// with k'.
template <class T>
T primed_sum(const SkewShape& shape, const ParameterSequence& a, const std::vector<T>& xs, const std::vector<T>& ys) {
  const int n = static_cast<int>(xs.size());
  if (n == 0) return T(Rational(shape.size() == 0 ? 1 : 0));
  const CellFactors<T> f(shape, a, xs, ys);
  T total(Rational(0));
  std::vector<T> running(n + 1, T(Rational(1)));
  auto rec = [&](auto&& self, int level, const std::vector<int>& cur, const std::vector<int>& outer) -> void {
    if (level > n) {
      if (cur == outer) total = total + running[n];
      return;
    }
    next_levels(cur, outer, [&](const std::vector<int>& nu) {
      if (level == n && nu != outer) return;
      // Per used row: product with a plain first cell and with a primed one.
      std::vector<T> plain, primed;
      std::vector<char> forced;
      const int rows = static_cast<int>(nu.size());
      for (int r = 0; r < rows; ++r) {
        if (nu[r] == cur[r]) continue;
        const int first = cur[r] + 1 - (r + 1);
        T rest(Rational(1));
        for (int col = cur[r] + 2; col <= nu[r]; ++col) rest = rest * f.xf(level, col - (r + 1));
        plain.push_back(rest * f.xf(level, first));
        primed.push_back(rest * f.yf(level, first));
        forced.push_back(r + 1 < rows && nu[r + 1] > cur[r]);
      }
      const std::size_t used = plain.size();
      for (std::size_t mask = 0; mask < (std::size_t{1} << used); ++mask) {
        T w = running[level - 1];
        bool valid = true;
        for (std::size_t b = 0; b < used && valid; ++b) {
          const bool p = (mask >> b) & 1;
          if (forced[b] && !p) valid = false;
          w = w * (p ? primed[b] : plain[b]);
        }
        if (!valid) continue;
        running[level] = w;
        self(self, level + 1, nu, outer);
      }
    });
  };
  const int rows = shape.outer().length();
  rec(rec, 1, padded(shape.inner(), rows), padded(shape.outer(), rows));
  return total;
}

}  // namespace

Rational combinatorial_sum(const SkewShape& shape, const ParameterSequence& a, const EvalPoint& pt,
                           CombinatorialRoute route) {
  return route == CombinatorialRoute::level_strips ? strip_sum(shape, a, pt.x, pt.y) : primed_sum(shape, a, pt.x, pt.y);
}

SuperPolynomial combinatorial_sum(const SkewShape& shape, const ParameterSequence& a, int n, CombinatorialRoute route) {
  if (n < 1 || n > 2 || shape.size() > 6)
    throw std::invalid_argument("symbolic combinatorial sums need n <= 2 and at most 6 cells; pass a numeric point");
  std::vector<Polynomial> xs, ys;
  for (int i = 1; i <= n; ++i) {
    xs.push_back(Polynomial::variable(SuperPolynomial::x_var(n, i)));
    ys.push_back(Polynomial::variable(SuperPolynomial::y_var(n, i)));
  }
  return {n, route == CombinatorialRoute::level_strips ? strip_sum(shape, a, xs, ys) : primed_sum(shape, a, xs, ys)};
}

namespace {

// Depth-first walk over vertex-disjoint path collections. on_step(row, from,
// to) is called before descending and returns false to prune; on_undo
// reverses it.
template <class OnStep, class OnUndo, class OnLeaf>
void walk_paths(const SkewShape& shape, int n, OnStep&& on_step, OnUndo&& on_undo, OnLeaf&& on_leaf) {
  const int rows = shape.outer().length();
  if (rows == 0) {
    on_leaf();
    return;
  }
  const int m_lo = shape.inner().row(rows) - rows, m_hi = shape.outer().row(1) - 1;
  const int width = m_hi - m_lo + 1;
  std::vector<char> used(static_cast<std::size_t>(width) * (n + 1), 0);
  auto slot = [&](LatticePoint p) -> char& { return used[static_cast<std::size_t>(p.m - m_lo) * (n + 1) + p.k]; };

  auto path = [&](auto&& self_row, int i) -> void {
    if (i > rows) {
      on_leaf();
      return;
    }
    const LatticePoint start{shape.inner().row(i) - i, 0}, end{shape.outer().row(i) - i, n};
    if (slot(start)) return;
    slot(start) = 1;
    auto walk = [&](auto&& self, LatticePoint p) -> void {
      if (p == end) {
        self_row(self_row, i + 1);
        return;
      }
      const LatticePoint options[3] = {{p.m + 1, p.k}, {p.m + 1, p.k + 1}, {p.m, p.k + 1}};
      for (int s = 0; s < 3; ++s) {
        const LatticePoint q = options[s];
        if (s == 0 && p.k == 0) continue;  // no horizontal step on the base line
        if (q.m > end.m || q.k > n || slot(q)) continue;
        if (!on_step(i, p, q)) continue;
        slot(q) = 1;
        self(self, q);
        slot(q) = 0;
        on_undo(i, p, q);
      }
    };
    walk(walk, start);
    slot(start) = 0;
  };
  path(path, 1);
}

}  // namespace

void for_each_path_collection(const SkewShape& shape, int n, const std::function<void(const PathCollection&)>& visit) {
  if (n < 0) throw std::invalid_argument("path height must be nonnegative");
  const int rows = shape.outer().length();
  PathCollection L;
  L.paths.resize(rows);
  for (int i = 1; i <= rows; ++i) L.paths[i - 1] = {{shape.inner().row(i) - i, 0}};
  walk_paths(
      shape, n,
      [&](int i, LatticePoint, LatticePoint q) {
        L.paths[i - 1].push_back(q);
        return true;
      },
      [&](int i, LatticePoint, LatticePoint) { L.paths[i - 1].pop_back(); }, [&]() { visit(L); });
}

std::vector<PathCollection> enumerate_paths(const SkewShape& shape, int n) {
  std::vector<PathCollection> out;
  for_each_path_collection(shape, n, [&](const PathCollection& L) { out.push_back(L); });
  return out;
}

namespace {

// Weight of one step; vertical steps and steps above the point's range
// never occur for valid collections.
Rational step_weight(LatticePoint p, LatticePoint q, const ParameterSequence& a, const EvalPoint& pt) {
  if (q.m == p.m) return 1;
  if (q.k == p.k) return pt.x.at(q.k - 1) - a[q.m];
  return pt.y.at(q.k - 1) + a[q.m];
}

}  // namespace

Rational path_weight(const PathCollection& paths, const ParameterSequence& a, const EvalPoint& pt) {
  Rational w = 1;
  for (const auto& p : paths.paths)
    for (std::size_t t = 1; t < p.size(); ++t) w *= step_weight(p[t - 1], p[t], a, pt);
  return w;
}

Rational path_sum(const SkewShape& shape, const ParameterSequence& a, const EvalPoint& pt) {
  const CellFactors<Rational> f(shape, a, pt.x, pt.y);
  // Running products indexed by the number of steps taken so far.
  std::vector<Rational> running(1, Rational(1));
  std::size_t depth = 0;
  Rational total = 0;
  walk_paths(
      shape, pt.n(),
      [&](int, LatticePoint p, LatticePoint q) {
        if (running.size() <= depth + 1) running.resize(depth + 2);
        if (q.m == p.m) {
          running[depth + 1] = running[depth];
        } else {
          const Rational& w = q.k == p.k ? f.xf(q.k, q.m) : f.yf(q.k, q.m);
          if (w == 0) return false;
          running[depth + 1] = running[depth] * w;
        }
        ++depth;
        return true;
      },
      [&](int, LatticePoint, LatticePoint) { --depth; }, [&]() { total += running[depth]; });
  return total;
}

PrimedTableau tableau_from_paths(const PathCollection& paths, const SkewShape& shape) {
  const int rows = shape.outer().length();
  if (static_cast<int>(paths.paths.size()) != rows) throw std::invalid_argument("tableau_from_paths: one path per row needed");
  PrimedTableau t;
  t.shape = shape;
  for (int i = 1; i <= rows; ++i) {
    const auto& p = paths.paths[i - 1];
    if (p.empty() || p.front() != LatticePoint{shape.inner().row(i) - i, 0} ||
        p.back().m != shape.outer().row(i) - i)
      throw std::invalid_argument("tableau_from_paths: path " + std::to_string(i) + " has the wrong endpoints");
    for (std::size_t s = 1; s < p.size(); ++s) {
      const LatticePoint from = p[s - 1], to = p[s];
      if (to.m == from.m) continue;
      t.entries.push_back(to.k == from.k ? unprimed_symbol(to.k) : primed_symbol(to.k));
    }
  }
  if (t.entries.size() != static_cast<std::size_t>(shape.size()))
    throw std::invalid_argument("tableau_from_paths: steps do not cover the shape");
  return t;
}

PathCollection paths_from_tableau(const PrimedTableau& t, int n) {
  if (!is_primed_tableau(t, n)) throw std::invalid_argument("paths_from_tableau: not a primed tableau of order n");
  const SkewShape& shape = t.shape;
  PathCollection out;
  std::size_t k = 0;
  for (int i = 1; i <= shape.outer().length(); ++i) {
    std::vector<LatticePoint> p{{shape.inner().row(i) - i, 0}};
    auto climb = [&](int height) {
      while (p.back().k < height) p.push_back({p.back().m, p.back().k + 1});
    };
    for (int j = shape.inner().row(i) + 1; j <= shape.outer().row(i); ++j) {
      const int s = t.entries[k++], level = symbol_level(s);
      if (is_primed(s)) {
        climb(level - 1);
        p.push_back({j - i, level});
      } else {
        climb(level);
        p.push_back({j - i, level});
      }
    }
    climb(n);
    out.paths.push_back(std::move(p));
  }
  return out;
}

std::vector<Rational> h_by_branching(const ParameterSequence& a, const EvalPoint& pt, int max_k) {
  std::vector<Rational> h(max_k + 1, Rational(0));
  if (max_k < 0) return h;
  h[0] = 1;
  for (int j = 0; j < pt.n(); ++j) {
    const Rational& x = pt.x[j];
    const Rational sum_xy = x + pt.y[j];
    std::vector<Rational> next = h;
    for (int k = 1; k <= max_k; ++k) {
      Rational inner = 0;
      for (int r = 0; r <= k - 1; ++r) {
        Rational prod = h[r];
        for (int t = 1; t <= k - 1 - r; ++t) prod *= x - a[k - t];
        inner += prod;
      }
      next[k] += sum_xy * inner;
    }
    h = std::move(next);
  }
  return h;
}

std::vector<Rational> h_by_series(const ParameterSequence& a, const EvalPoint& pt, int max_k) {
  if (max_k < 0) return {};
  // Coefficients of u^{-m} in prod (u+y_i)/(u-x_i), and
  // 1/(u|a)^k = u^{-k} sum_j h_j(a_1..a_k) u^{-j}.
  const auto c = super_h_values(pt, max_k);
  std::vector<Rational> a_values;
  for (int i = 1; i <= max_k; ++i) a_values.push_back(a[i]);
  const auto table = complete_homogeneous_table(a_values, max_k);
  std::vector<Rational> h(max_k + 1);
  h[0] = 1;
  for (int m = 1; m <= max_k; ++m) {
    h[m] = c[m];
    for (int k = 1; k < m; ++k) h[m] -= h[k] * table[k][m - k];
  }
  return h;
}

namespace {

Rational h_determinant(const SkewShape& shape, const ParameterSequence& a, const EvalPoint& pt,
                       std::vector<Rational> (*h_values)(const ParameterSequence&, const EvalPoint&, int)) {
  const Partition& lambda = shape.outer();
  const Partition& mu = shape.inner();
  const int rows = lambda.length();
  RationalMatrix m(rows, std::vector<Rational>(rows));
  for (int j = 1; j <= rows; ++j) {
    const int max_k = lambda.row(1) - mu.row(j) + j - 1;
    const auto h = h_values(a.shift(mu.row(j) - j + 1), pt, max_k);
    for (int i = 1; i <= rows; ++i) {
      const int k = lambda.row(i) - mu.row(j) + j - i;
      if (k >= 0) m[i - 1][j - 1] = h[k];
    }
  }
  return determinant(std::move(m));
}

}  // namespace

Rational gessel_viennot_determinant(const SkewShape& shape, const ParameterSequence& a, const EvalPoint& pt) {
  return h_determinant(shape, a, pt, h_by_branching);
}

Rational skew_determinant(const SkewShape& shape, const ParameterSequence& a, const EvalPoint& pt) {
  return h_determinant(shape, a, pt, h_by_series);
}

BijectionResult check_path_bijection(const SkewShape& shape, int n, const ParameterSequence& a, const EvalPoint& pt) {
  BijectionResult res;
  std::set<std::vector<int>> images;
  auto fail = [&](const std::string& why) {
    if (res.problem.empty()) res.problem = why;
  };
  for_each_path_collection(shape, n, [&](const PathCollection& L) {
    ++res.path_collections;
    if (!res.problem.empty()) return;
    PrimedTableau t;
    try {
      t = tableau_from_paths(L, shape);
    } catch (const std::invalid_argument& e) {
      fail(e.what());
      return;
    }
    if (!is_primed_tableau(t, n)) return fail("image " + t.to_string() + " is not a primed tableau");
    if (!images.insert(t.entries).second) return fail("two collections map to " + t.to_string());
    if (paths_from_tableau(t, n) != L) return fail("inverse map does not return the collection for " + t.to_string());
    if (path_weight(L, a, pt) != tableau_weight(t, a, pt)) return fail("weights differ at " + t.to_string());
  });
  std::set<std::vector<int>> tableaux;
  for_each_primed(shape, n, [&](const PrimedTableau& t) {
    ++res.tableaux;
    tableaux.insert(t.entries);
  });
  if (res.problem.empty() && images != tableaux) fail("images differ from the enumerated primed tableaux");
  res.ok = res.problem.empty();
  return res;
}

}  // namespace fsf
