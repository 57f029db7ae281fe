#include "fsf/param_seq.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

namespace fsf {

ParameterSequence ParameterSequence::fs() {
  ParameterSequence a;
  a.form_ = Form::fs;
  return a;
}

ParameterSequence ParameterSequence::affine(const Rational& alpha, const Rational& beta) {
  ParameterSequence a;
  a.form_ = Form::affine;
  a.alpha_ = alpha;
  a.beta_ = beta;
  return a;
}

ParameterSequence ParameterSequence::table(int base, std::vector<Rational> values) {
  ParameterSequence a;
  a.form_ = Form::table;
  a.base_ = base;
  a.values_ = std::move(values);
  return a;
}

ParameterSequence ParameterSequence::seeded_table(std::uint64_t seed, int lo, int hi) {
  if (hi < lo) throw std::invalid_argument("seeded_table: empty window");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-60, 60);
  std::uniform_int_distribution<int> den(1, 7);
  std::set<Rational> seen;
  std::vector<Rational> values;
  while (static_cast<int>(values.size()) < hi - lo + 1) {
    Rational r(num(rng), den(rng));
    r.canonicalize();
    if (seen.insert(r).second) values.push_back(r);
  }
  return table(lo, std::move(values));
}

ParameterSequence ParameterSequence::parse(std::string_view text) {
  auto fail = [&]() -> ParameterSequence {
    throw std::invalid_argument("malformed parameter sequence '" + std::string(text) +
                                "' (expected zero, fs, affine:A:B or table:BASE:V0,V1,...)");
  };
  if (text == "zero") return zero();
  if (text == "fs") return fs();
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) return fail();
  const std::string_view kind = text.substr(0, colon);
  const std::string_view rest = text.substr(colon + 1);
  const auto second = rest.find(':');
  if (second == std::string_view::npos) return fail();
  const std::string_view first_arg = rest.substr(0, second);
  const std::string_view second_arg = rest.substr(second + 1);
  if (kind == "affine") return affine(parse_rational(first_arg), parse_rational(second_arg));
  if (kind == "table") {
    const Rational base = parse_rational(first_arg);
    if (base.get_den() != 1 || !base.get_num().fits_sint_p()) return fail();
    std::vector<Rational> values;
    std::size_t start = 0;
    while (start <= second_arg.size()) {
      const auto comma = second_arg.find(',', start);
      const auto end = comma == std::string_view::npos ? second_arg.size() : comma;
      values.push_back(parse_rational(second_arg.substr(start, end - start)));
      start = end + 1;
    }
    return table(static_cast<int>(base.get_num().get_si()), std::move(values));
  }
  return fail();
}

std::string ParameterSequence::to_string() const {
  switch (form_) {
    case Form::zero:
      return "zero";
    case Form::fs:
      return "fs";
    case Form::affine:
      return "affine:" + fsf::to_string(alpha_) + ":" + fsf::to_string(beta_);
    case Form::table: {
      std::string out = "table:" + std::to_string(base_) + ":";
      for (std::size_t i = 0; i < values_.size(); ++i) {
        if (i) out += ',';
        out += fsf::to_string(values_[i]);
      }
      return out;
    }
  }
  return "";
}

std::optional<std::pair<int, int>> ParameterSequence::window() const {
  if (form_ != Form::table) return std::nullopt;
  return std::make_pair(base_, base_ + static_cast<int>(values_.size()) - 1);
}

bool ParameterSequence::defined_at(int i) const {
  return form_ != Form::table || (i >= base_ && i < base_ + static_cast<int>(values_.size()));
}

Rational ParameterSequence::value_at(int i) const {
  switch (form_) {
    case Form::zero:
      return 0;
    case Form::fs:
      return Rational(2 * i - 1, 2);
    case Form::affine:
      return alpha_ * i + beta_;
    case Form::table:
      if (!defined_at(i))
        throw std::out_of_range("parameter index " + std::to_string(i) + " outside table window [" +
                                std::to_string(base_) + ", " +
                                std::to_string(base_ + static_cast<int>(values_.size()) - 1) + "]");
      return values_[i - base_];
  }
  throw std::logic_error("unknown sequence form");
}

ParameterSequence ParameterSequence::dual() const {
  switch (form_) {
    case Form::zero:
    case Form::fs:
      return *this;
    case Form::affine:
      return affine(alpha_, -alpha_ - beta_);
    case Form::table: {
      // Index i of the dual reads index 1 - i of the original, so the
      // window [b, b + L - 1] maps to [2 - b - L, 1 - b], reversed.
      std::vector<Rational> values;
      values.reserve(values_.size());
      for (auto it = values_.rbegin(); it != values_.rend(); ++it) values.push_back(-*it);
      return table(2 - base_ - static_cast<int>(values_.size()), std::move(values));
    }
  }
  throw std::logic_error("unknown sequence form");
}

ParameterSequence ParameterSequence::shift(int r) const {
  switch (form_) {
    case Form::zero:
      return *this;
    case Form::fs:
      return affine(1, Rational(2 * r - 1, 2));
    case Form::affine:
      return affine(alpha_, beta_ + alpha_ * r);
    case Form::table:
      return table(base_ - r, values_);
  }
  throw std::logic_error("unknown sequence form");
}

Rational ParameterSequence::primed(const Rational& eps) const {
  const Rational index = eps + Rational(1, 2);
  if (index.get_den() != 1 || !index.get_num().fits_sint_p())
    throw std::invalid_argument("primed index must be a half-integer, got " + fsf::to_string(eps));
  return value_at(static_cast<int>(index.get_num().get_si()));
}

bool pointwise_equal(const ParameterSequence& a, const ParameterSequence& b, int lo, int hi) {
  for (int i = lo; i <= hi; ++i)
    if (a.value_at(i) != b.value_at(i)) return false;
  return true;
}

Polynomial factorial_power(const ParameterSequence& a, int k, int var) {
  if (k < 0) throw std::invalid_argument("factorial_power: negative degree");
  Polynomial out(1);
  const Polynomial v = Polynomial::variable(var);
  for (int i = 1; i <= k; ++i) out = out * (v - Polynomial(a.value_at(i)));
  return out;
}

Rational factorial_power_at(const ParameterSequence& a, int k, const Rational& x) {
  if (k < 0) throw std::invalid_argument("factorial_power: negative degree");
  Rational out = 1;
  for (int i = 1; i <= k; ++i) out *= x - a.value_at(i);
  return out;
}

}  // namespace fsf
