#include "fsf/verify.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <stdexcept>

#include "fsf/lambda.hpp"
#include "fsf/multiparam.hpp"
#include "fsf/shifted.hpp"
#include "fsf/superpoly.hpp"
#include "fsf/tableaux.hpp"

namespace fsf {

namespace {

using Inputs = std::vector<std::pair<std::string, std::string>>;

class Recorder {
 public:
  explicit Recorder(VerificationReport& r) : report_(r) {}

  void check(bool ok, Inputs inputs, std::string expected, std::string actual) {
    ++report_.cases_run;
    if (!ok) report_.failures.push_back({std::move(inputs), std::move(expected), std::move(actual)});
  }
  template <class T>
  void equal(const T& expected, const T& actual, Inputs inputs) {
    ++report_.cases_run;
    if (!(expected == actual)) report_.failures.push_back({std::move(inputs), show(expected), show(actual)});
  }

 private:
  static std::string show(const Rational& r) { return to_string(r); }
  static std::string show(const LambdaElement& f) { return f.to_string(); }
  static std::string show(const SuperPolynomial& f) { return f.to_string(); }

  VerificationReport& report_;
};

std::string bracket(const Partition& p) { return "[" + p.to_string() + "]"; }

std::vector<ParameterSequence> pick(const VerifyOptions& o, std::vector<ParameterSequence> defaults) {
  return o.sequences.empty() ? defaults : o.sequences;
}

std::vector<ParameterSequence> standard_sequences(const VerifyOptions& o) {
  return pick(o, {ParameterSequence::zero(), ParameterSequence::fs(), ParameterSequence::seeded_table(o.seed)});
}

std::vector<ParameterSequence> injective_sequences(const VerifyOptions& o) {
  return pick(o, {ParameterSequence::fs(), ParameterSequence::affine(Rational(1, 3), -2),
                  ParameterSequence::seeded_table(o.seed)});
}

std::vector<SkewShape> box_shapes(int max_size) {
  std::vector<SkewShape> out;
  const auto all = partitions_in_box(4, 4);
  for (const auto& lambda : all)
    for (const auto& mu : all)
      if (contains(mu, lambda) && lambda.size() - mu.size() <= max_size) out.emplace_back(lambda, mu);
  return out;
}

void combinatorial_suite(const VerifyOptions& o, Recorder& rec) {
  const int max_n = o.n.value_or(3);
  for (const auto& a : standard_sequences(o))
    for (int n = 1; n <= max_n; ++n) {
      const EvalPoint pt = sample_point(n);
      for (const auto& shape : box_shapes(o.max_size.value_or(16))) {
        const Rational expected = skew_determinant(shape, a, pt);
        const std::pair<const char*, std::function<Rational()>> routes[] = {
            {"level-strips", [&] { return combinatorial_sum(shape, a, pt, CombinatorialRoute::level_strips); }},
            {"primed-cells", [&] { return combinatorial_sum(shape, a, pt, CombinatorialRoute::primed_cells); }},
            {"lattice-paths", [&] { return path_sum(shape, a, pt); }},
            {"gessel-viennot", [&] { return gessel_viennot_determinant(shape, a, pt); }},
        };
        for (const auto& [name, route] : routes)
          rec.equal(expected, route(),
                    {{"shape", shape.to_string()}, {"n", std::to_string(n)}, {"seq", a.to_string()}, {"route", name}});
      }
    }
}

void sergeev_pragacz_suite(const VerifyOptions& o, Recorder& rec) {
  const int max_n = o.n.value_or(4);
  for (const auto& a : standard_sequences(o))
    for (const auto& mu : partitions_up_to(o.max_size.value_or(8))) {
      const LambdaElement s = s_multi(mu, a);
      for (int n = std::max(mu.depth(), 1); n <= max_n; ++n) {
        const Inputs in{{"mu", bracket(mu)}, {"n", std::to_string(n)}, {"seq", a.to_string()}};
        const SuperPolynomial expected = specialize(s, n);
        try {
          rec.equal(expected, sergeev_pragacz(mu, a, n), in);
        } catch (const std::domain_error& e) {
          rec.check(false, in, expected.to_string(), e.what());
        }
      }
    }
}

void giambelli_suite(const VerifyOptions& o, Recorder& rec) {
  for (const auto& a : standard_sequences(o))
    for (const auto& mu : partitions_up_to(o.max_size.value_or(8))) {
      const LambdaElement jt = s_multi(mu, a, SchurRoute::jacobi_trudi);
      rec.equal(jt, s_multi(mu, a, SchurRoute::nagelsbach_kostka),
                {{"mu", bracket(mu)}, {"seq", a.to_string()}, {"route", "nagelsbach-kostka"}});
      rec.equal(jt, s_multi(mu, a, SchurRoute::giambelli),
                {{"mu", bracket(mu)}, {"seq", a.to_string()}, {"route", "giambelli"}});
    }
}

void duality_suite(const VerifyOptions& o, Recorder& rec) {
  for (const auto& a : standard_sequences(o))
    for (const auto& mu : partitions_up_to(o.max_size.value_or(7)))
      rec.equal(s_multi(mu.conjugate(), a.dual()), omega(s_multi(mu, a)), {{"mu", bracket(mu)}, {"seq", a.to_string()}});
}

Rational hook_product(const Partition& mu) {
  Rational p = 1;
  for (const auto& [cell, h] : hook_lengths(mu)) p *= h;
  return p;
}

void vanishing_suite(const VerifyOptions& o, Recorder& rec) {
  const int max_size = o.max_size.value_or(6);
  const auto all = partitions_up_to(max_size);
  for (const auto& a : injective_sequences(o)) {
    std::vector<LambdaElement> s;
    for (const auto& mu : all) s.push_back(s_multi(mu, a));
    for (const auto& lambda : all) {
      const EvalPoint pt = diagram_point(lambda, a, lambda.depth());
      for (std::size_t k = 0; k < all.size(); ++k) {
        const Partition& mu = all[k];
        const Rational value = eval(s[k], pt);
        const Inputs in{{"mu", bracket(mu)}, {"lambda", bracket(lambda)}, {"seq", a.to_string()}};
        if (!contains(mu, lambda)) {
          rec.equal(Rational(0), value, in);
        } else if (mu == lambda) {
          const SpecialValue cells = special_value(mu, a, SpecialValueRoute::cell_product);
          const SpecialValue quotient = special_value(mu, a, SpecialValueRoute::frobenius_quotient);
          rec.check(value != 0, in, "nonzero", to_string(value));
          rec.equal(cells.value, value, in);
          rec.equal(quotient.value, value, in);
          if (a == ParameterSequence::fs()) rec.equal(hook_product(mu), value, in);
        } else {
          // The converse of vanishing. For FS it is positivity of dim(mu, lambda);
          // for other injective sequences it is checked, not proved.
          rec.check(value != 0, in, "nonzero", to_string(value));
        }
      }
    }
  }
}

void transition_suite(const VerifyOptions& o, Recorder& rec) {
  std::vector<std::pair<ParameterSequence, ParameterSequence>> pairs;
  if (o.from || o.to) {
    pairs.emplace_back(o.from.value_or(ParameterSequence::fs()), o.to.value_or(ParameterSequence::zero()));
  } else {
    pairs = {{ParameterSequence::fs(), ParameterSequence::zero()},
             {ParameterSequence::zero(), ParameterSequence::fs()},
             {ParameterSequence::affine(Rational(1, 3), -2), ParameterSequence::seeded_table(o.seed)}};
  }
  for (const auto& [a, b] : pairs) {
    std::map<Partition, LambdaElement> target;
    for (const auto& mu : partitions_up_to(o.max_size.value_or(7))) {
      LambdaElement sum;
      for (const auto& [nu, c] : transition_row(mu, a, b)) {
        auto it = target.find(nu);
        if (it == target.end()) it = target.emplace(nu, s_multi(nu, b)).first;
        sum += c * it->second;
      }
      rec.equal(s_multi(mu, a), sum, {{"mu", bracket(mu)}, {"from", a.to_string()}, {"to", b.to_string()}});
    }
  }
}

void hook_identity_suite(const VerifyOptions& o, Recorder& rec) {
  const int max_pq = o.max_size.value_or(4);
  for (const auto& a : pick(o, {ParameterSequence::zero(), ParameterSequence::fs(),
                                ParameterSequence::affine(Rational(1, 3), -2)})) {
    for (int p = 0; p <= max_pq; ++p)
      for (int q = 0; q <= max_pq; ++q)
        rec.check(hook_identity_check(p, q, a), {{"p", std::to_string(p)}, {"q", std::to_string(q)}, {"seq", a.to_string()}},
                  "identity holds", "identity fails");
  }
}

void phi_suite(const VerifyOptions& o, Recorder& rec) {
  const auto lambdas = partitions_up_to(o.max_lambda.value_or(8));
  for (const auto& mu : partitions_up_to(o.max_mu.value_or(5))) {
    const LambdaElement fs = fs_function(mu);
    for (const auto& lambda : lambdas) {
      const Rational shifted = shifted_schur_eval(mu, row_point(lambda));
      const Rational value = eval(fs, diagram_point(lambda, ParameterSequence::fs(), lambda.depth()));
      rec.equal(shifted, value, {{"mu", bracket(mu)}, {"lambda", bracket(lambda)}});
    }
  }
}

void paths_suite(const VerifyOptions& o, Recorder& rec) {
  const int max_n = o.n.value_or(3);
  const int max_size = o.max_size.value_or(6);
  // Skew shapes in a 4x4 box, plus every lambda/mu with |lambda| <= max_size + 2
  // so that long rows and columns also appear.
  std::vector<SkewShape> shapes = box_shapes(max_size);
  const auto small = partitions_up_to(max_size + 2);
  for (const auto& lambda : small)
    for (const auto& mu : small)
      if (contains(mu, lambda) && lambda.size() - mu.size() <= max_size &&
          !(lambda.length() <= 4 && lambda.row(1) <= 4))
        shapes.emplace_back(lambda, mu);
  for (const auto& a : pick(o, {ParameterSequence::seeded_table(o.seed)}))
    for (const auto& shape : shapes)
      for (int n = 1; n <= max_n; ++n) {
        const BijectionResult r = check_path_bijection(shape, n, a, sample_point(n));
        rec.check(r.ok && r.path_collections == r.tableaux,
                  {{"shape", shape.to_string()}, {"n", std::to_string(n)}, {"seq", a.to_string()}},
                  "weight-preserving bijection",
                  r.problem.empty() ? std::to_string(r.path_collections) + " collections vs " +
                                          std::to_string(r.tableaux) + " tableaux"
                                    : r.problem);
      }
}

void series_suite(const VerifyOptions& o, Recorder& rec) {
  const int order = o.max_size.value_or(10);
  auto e_neg = E_series(order);
  for (int k = 1; k <= order; k += 2) e_neg[k] = -e_neg[k];
  rec.check(H_series(order) * e_neg == TruncatedSeries<LambdaElement>::constant(order, LambdaElement(1)),
            {{"identity", "H(u)E(-u)"}, {"order", std::to_string(order)}}, "1", "differs");

  for (const auto& a : pick(o, {ParameterSequence::fs()})) {
    std::vector<LambdaElement> h, e;
    for (int k = 0; k <= 8; ++k) {
      h.push_back(s_multi(Partition(std::vector<int>(k > 0 ? 1 : 0, k)), a));
      e.push_back(s_multi(Partition(std::vector<int>(k, 1)), a));
    }
    rec.check(h_series_check(h, a, 8), {{"identity", "h-series"}, {"seq", a.to_string()}}, "holds", "fails");
    rec.check(e_series_check(e, a, 8), {{"identity", "e-series"}, {"seq", a.to_string()}}, "holds", "fails");
    rec.check(hook_series_check(a, 3), {{"identity", "hook-series"}, {"seq", a.to_string()}}, "holds", "fails");
  }

  const std::vector<std::vector<Rational>> points{{2, 1}, {Rational(5, 2), Rational(-1, 3), 4}};
  for (const auto& x : points) {
    std::string shown;
    for (const auto& v : x) shown += (shown.empty() ? "" : ",") + to_string(v);
    rec.check(shifted_series_check(8, x), {{"identity", "shifted H*E*"}, {"x", shown}}, "holds", "fails");
  }
}

const std::map<std::string, void (*)(const VerifyOptions&, Recorder&)>& suites() {
  static const std::map<std::string, void (*)(const VerifyOptions&, Recorder&)> table{
      {"jacobi-trudi-vs-combinatorial", combinatorial_suite},
      {"sergeev-pragacz", sergeev_pragacz_suite},
      {"giambelli", giambelli_suite},
      {"duality", duality_suite},
      {"vanishing", vanishing_suite},
      {"transition", transition_suite},
      {"hook-identity", hook_identity_suite},
      {"phi", phi_suite},
      {"paths-bijection", paths_suite},
      {"series", series_suite},
  };
  return table;
}

}  // namespace

EvalPoint sample_point(int n) {
  const std::vector<Rational> xs{Rational(3, 2), Rational(-2), Rational(5, 7), Rational(4), Rational(-1, 6)};
  const std::vector<Rational> ys{Rational(1, 3), Rational(7, 2), Rational(-3, 5), Rational(2), Rational(9, 4)};
  if (n > static_cast<int>(xs.size())) throw std::invalid_argument("at most 5 pairs of variables are supported");
  return EvalPoint(std::vector<Rational>(xs.begin(), xs.begin() + n), std::vector<Rational>(ys.begin(), ys.begin() + n));
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"jacobi-trudi-vs-combinatorial",
                                              "sergeev-pragacz",
                                              "giambelli",
                                              "duality",
                                              "vanishing",
                                              "transition",
                                              "hook-identity",
                                              "phi",
                                              "paths-bijection",
                                              "series"};
  return names;
}

VerificationReport run_suite(const std::string& suite, const VerifyOptions& options) {
  const auto it = suites().find(suite);
  if (it == suites().end()) throw std::invalid_argument("unknown suite '" + suite + "'");
  VerificationReport report;
  report.suite = suite;
  const auto start = std::chrono::steady_clock::now();
  Recorder rec(report);
  it->second(options, rec);
  report.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace fsf
