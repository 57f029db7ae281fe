#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fsf/param_seq.hpp"
#include "fsf/superpoly.hpp"

namespace fsf {

struct VerificationFailure {
  std::vector<std::pair<std::string, std::string>> inputs;
  std::string expected;
  std::string actual;
};

struct VerificationReport {
  std::string suite;
  std::uint64_t cases_run = 0;
  std::vector<VerificationFailure> failures;
  double elapsed_ms = 0;

  bool ok() const { return failures.empty(); }
};

/// Bounds for a sweep; unset fields take the suite's default.
struct VerifyOptions {
  std::optional<int> max_size;
  std::optional<int> max_mu;
  std::optional<int> max_lambda;
  std::optional<int> n;
  /// Replaces the suite's default sequences. The vanishing suite expects
  /// injective ones.
  std::vector<ParameterSequence> sequences;
  /// Source and target for the transition suite.
  std::optional<ParameterSequence> from;
  std::optional<ParameterSequence> to;
  /// Seed of the table sequence in the default sequence lists.
  std::uint64_t seed = 20240601;
};

/// The fixed generic point the suites evaluate at, with n <= 5 pairs of
/// variables. Throws std::invalid_argument for larger n.
EvalPoint sample_point(int n);

/// jacobi-trudi-vs-combinatorial, sergeev-pragacz, giambelli, duality,
/// vanishing, transition, hook-identity, phi, paths-bijection, series.
const std::vector<std::string>& suite_names();

/// Runs one suite exhaustively over its bounds. Throws std::invalid_argument
/// for an unknown suite name.
VerificationReport run_suite(const std::string& suite, const VerifyOptions& options);

}  // namespace fsf
