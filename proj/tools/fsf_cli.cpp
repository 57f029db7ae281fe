#include <chrono>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fsf/lambda.hpp"
#include "fsf/multiparam.hpp"
#include "fsf/shifted.hpp"
#include "fsf/superpoly.hpp"
#include "fsf/tableaux.hpp"
#include "fsf/verify.hpp"

using json = nlohmann::ordered_json;
using namespace fsf;

namespace {

constexpr int kVerificationFailure = 1;
constexpr int kUsageError = 2;

// Bad flag values found after CLI11 parsing, e.g. a malformed partition.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string key(const Partition& p) { return "[" + p.to_string() + "]"; }

template <class Map>
json expansion_json(const Map& terms) {
  json out = json::object();
  for (const auto& [p, c] : terms) out[key(p)] = to_string(c);
  return out;
}

Partition parse_partition(const std::string& text, const char* flag) {
  try {
    return Partition::parse(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string(flag) + ": " + e.what());
  }
}

ParameterSequence parse_sequence(const std::string& text, const char* flag) {
  try {
    return ParameterSequence::parse(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string(flag) + ": " + e.what());
  }
}

void print(const json& j) { std::cout << j.dump() << '\n'; }

struct Flags {
  std::string mu, nu, shape, seq, from, to, at_diagram, at, suite, count;
  std::vector<std::string> seqs;
  std::string basis = "schur";
  std::string methods = "brute,shifted,fs";
  std::optional<int> max_size, max_mu, max_lambda, n;
  std::optional<std::uint64_t> seed;
  bool verify_bijection = false;
};

int cmd_expand(const Flags& f) {
  const LambdaElement s = s_multi(parse_partition(f.mu, "--mu"), parse_sequence(f.seq, "--seq"));
  if (f.basis == "schur") {
    print(expansion_json(expand_in_schur(s)));
  } else {
    print(expansion_json(s.terms()));
  }
  return 0;
}

int cmd_transition(const Flags& f) {
  print(expansion_json(transition_row(parse_partition(f.mu, "--mu"), parse_sequence(f.from, "--from"),
                                      parse_sequence(f.to, "--to"))));
  return 0;
}

int cmd_eval(const Flags& f) {
  const Partition mu = parse_partition(f.mu, "--mu");
  const ParameterSequence a = parse_sequence(f.seq, "--seq");
  if (f.at_diagram.empty() == f.at.empty()) throw UsageError("give exactly one of --at-diagram and --at");
  EvalPoint pt;
  if (!f.at_diagram.empty()) {
    const Partition lambda = parse_partition(f.at_diagram, "--at-diagram");
    pt = diagram_point(lambda, a, lambda.depth());
  } else {
    try {
      pt = EvalPoint::parse(f.at);
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("--at: ") + e.what());
    }
  }
  print(to_string(eval(s_multi(mu, a), pt)));
  return 0;
}

int cmd_tableaux(const Flags& f) {
  SkewShape shape;
  try {
    shape = SkewShape::parse(f.shape);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--shape: ") + e.what());
  }
  if (!f.n || *f.n < 0) throw UsageError("--n must be a nonnegative integer");
  if (f.count.empty() && !f.verify_bijection) throw UsageError("give --count and/or --verify-bijection");
  json out;
  out["shape"] = shape.to_string();
  out["n"] = *f.n;
  if (f.count == "primed") out["primed"] = count_primed(shape, *f.n);
  if (f.count == "diagonal") out["diagonal"] = count_diagonal_strict(shape, *f.n);
  int code = 0;
  if (f.verify_bijection) {
    const ParameterSequence a = f.seq.empty() ? ParameterSequence::seeded_table(f.seed.value_or(VerifyOptions{}.seed))
                                              : parse_sequence(f.seq, "--seq");
    const BijectionResult r = check_path_bijection(shape, *f.n, a, sample_point(*f.n));
    out["path_collections"] = r.path_collections;
    out["tableaux"] = r.tableaux;
    out["bijection"] = r.ok;
    if (!r.ok) {
      out["problem"] = r.problem;
      code = kVerificationFailure;
    }
  }
  print(out);
  return code;
}

int cmd_dim_ratio(const Flags& f) {
  const Partition mu = parse_partition(f.mu, "--mu");
  const Partition nu = parse_partition(f.nu, "--nu");
  json out = json::object();
  std::optional<Rational> first;
  bool agree = true;
  std::stringstream list(f.methods);
  for (std::string method; std::getline(list, method, ',');) {
    Rational value;
    if (method == "brute") {
      value = dim_ratio_brute(mu, nu);
    } else if (method == "shifted") {
      value = dim_ratio_shifted(mu, nu);
    } else if (method == "fs") {
      value = dim_ratio_fs(mu, nu);
    } else {
      throw UsageError("--methods: unknown method '" + method + "'");
    }
    out[method] = to_string(value);
    if (first && *first != value) agree = false;
    if (!first) first = value;
  }
  if (!first) throw UsageError("--methods: no method given");
  out["agree"] = agree;
  print(out);
  return agree ? 0 : kVerificationFailure;
}

int cmd_verify(const Flags& f) {
  VerifyOptions opts;
  opts.max_size = f.max_size;
  opts.max_mu = f.max_mu;
  opts.max_lambda = f.max_lambda;
  opts.n = f.n;
  if (f.seed) opts.seed = *f.seed;
  for (const auto& s : f.seqs) opts.sequences.push_back(parse_sequence(s, "--seq"));
  if (!f.from.empty()) opts.from = parse_sequence(f.from, "--from");
  if (!f.to.empty()) opts.to = parse_sequence(f.to, "--to");
  VerificationReport report;
  try {
    report = run_suite(f.suite, opts);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  json failures = json::array();
  for (const auto& fail : report.failures) {
    json inputs = json::object();
    for (const auto& [k, v] : fail.inputs) inputs[k] = v;
    failures.push_back({{"inputs", inputs}, {"expected", fail.expected}, {"actual", fail.actual}});
  }
  print({{"suite", report.suite}, {"cases_run", report.cases_run}, {"failures", failures}});
  // Timing varies between runs, so it stays off stdout.
  std::cerr << "elapsed_ms " << static_cast<long long>(report.elapsed_ms) << '\n';
  return report.ok() ? 0 : kVerificationFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multiparameter Schur functions in exact arithmetic"};
  app.require_subcommand(1);
  Flags f;

  auto* expand = app.add_subcommand("expand", "s_{mu;a} in the Schur or h basis");
  expand->add_option("--mu", f.mu, "partition, e.g. 2,1")->required();
  expand->add_option("--seq", f.seq, "parameter sequence")->required();
  expand->add_option("--basis", f.basis)->check(CLI::IsMember({"schur", "h"}));

  auto* transition = app.add_subcommand("transition", "coefficients of s_{mu;from} in the s_{nu;to} basis");
  transition->add_option("--mu", f.mu)->required();
  transition->add_option("--from", f.from)->required();
  transition->add_option("--to", f.to)->required();

  auto* ev = app.add_subcommand("eval", "s_{mu;a} at a diagram point or explicit coordinates");
  ev->add_option("--mu", f.mu)->required();
  ev->add_option("--seq", f.seq)->required();
  ev->add_option("--at-diagram", f.at_diagram, "partition lambda; evaluates at its a-Frobenius point");
  ev->add_option("--at", f.at, "x=1/2,3;y=0,-1");

  auto* tab = app.add_subcommand("tableaux", "count tableaux or check the lattice path bijection");
  tab->add_option("--shape", f.shape, "skew shape, e.g. 4,2,2/1,1")->required();
  tab->add_option("--n", f.n)->required();
  tab->add_option("--count", f.count)->check(CLI::IsMember({"primed", "diagonal"}));
  tab->add_flag("--verify-bijection", f.verify_bijection);
  tab->add_option("--seq", f.seq, "sequence for the weight check (default: seeded table)");
  tab->add_option("--seed", f.seed);

  auto* ratio = app.add_subcommand("dim-ratio", "dim(mu,nu)/dim nu by several routes");
  ratio->add_option("--mu", f.mu)->required();
  ratio->add_option("--nu", f.nu)->required();
  ratio->add_option("--methods", f.methods, "comma list of brute, shifted, fs");

  auto* verify = app.add_subcommand("verify", "run an identity verification sweep");
  verify->add_option("--suite", f.suite)->required();
  verify->add_option("--max-size", f.max_size);
  verify->add_option("--max-mu", f.max_mu);
  verify->add_option("--max-lambda", f.max_lambda);
  verify->add_option("--n", f.n);
  verify->add_option("--seed", f.seed);
  verify->add_option("--seq", f.seqs, "repeatable; replaces the suite's default sequences");
  verify->add_option("--from", f.from);
  verify->add_option("--to", f.to);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  try {
    if (*expand) return cmd_expand(f);
    if (*transition) return cmd_transition(f);
    if (*ev) return cmd_eval(f);
    if (*tab) return cmd_tableaux(f);
    if (*ratio) return cmd_dim_ratio(f);
    return cmd_verify(f);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  }
}
