#include <gtest/gtest.h>

#include <bit>
#include <random>
#include <set>

#include "fsf/multiparam.hpp"
#include "fsf/superpoly.hpp"

using namespace fsf;

namespace {

LambdaElement h(int k) { return LambdaElement::h(k); }

SuperPolynomial xs(int n, int i) { return SuperPolynomial::x(n, i); }
SuperPolynomial ys(int n, int i) { return SuperPolynomial::y(n, i); }
SuperPolynomial constant(int n, const Rational& c) { return {n, Polynomial(c)}; }

LambdaElement random_element(std::mt19937& rng, int max_degree) {
  std::uniform_int_distribution<int> coeff(-4, 4), size(0, max_degree);
  LambdaElement f;
  for (int t = 0; t < 4; ++t) {
    const auto parts = partitions_of(size(rng));
    std::uniform_int_distribution<std::size_t> pick(0, parts.size() - 1);
    f += LambdaElement::h_monomial(parts[pick(rng)], Rational(coeff(rng), 1 + (coeff(rng) + 4) % 3));
  }
  return f;
}

// h_k(x;y) = sum_j h_{k-j}(x) e_j(y) by enumerating index multisets and sets.
Rational brute_super_h(const EvalPoint& pt, int k) {
  const int n = pt.n();
  std::vector<Rational> hx(k + 1), ey(k + 1);
  for (int m = 0; m <= k; ++m) {
    auto rec = [&](auto&& self, int start, int left, Rational prod) -> void {
      if (left == 0) {
        hx[m] += prod;
        return;
      }
      for (int i = start; i < n; ++i) self(self, i, left - 1, prod * pt.x[i]);
    };
    rec(rec, 0, m, Rational(1));
  }
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    const int j = std::popcount(mask);
    if (j > k) continue;
    Rational prod = 1;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) prod *= pt.y[i];
    ey[j] += prod;
  }
  Rational total = 0;
  for (int j = 0; j <= k; ++j) total += hx[k - j] * ey[j];
  return total;
}

std::vector<ParameterSequence> injective_sequences() {
  return {ParameterSequence::fs(), ParameterSequence::affine(Rational(1, 3), -2),
          ParameterSequence::seeded_table(20240601)};
}

}  // namespace

TEST(SuperPoly, SpecializeExamples) {
  EXPECT_EQ(specialize(h(1), 2), xs(2, 1) + xs(2, 2) + ys(2, 1) + ys(2, 2));
  EXPECT_EQ(specialize(power_sum(2), 2), xs(2, 1) * xs(2, 1) + xs(2, 2) * xs(2, 2) - ys(2, 1) * ys(2, 1) - ys(2, 2) * ys(2, 2));
  EXPECT_EQ(specialize(schur(Partition({1, 1})), 1), ys(1, 1) * (xs(1, 1) + ys(1, 1)));
  EXPECT_EQ(specialize(LambdaElement(3), 2), constant(2, 3));
  EXPECT_THROW(specialize(h(1), 0), std::invalid_argument);
}

TEST(SuperPoly, SuperPowerSums) {
  // p_k(x;y) = sum x_i^k + (-1)^{k-1} sum y_i^k.
  for (int n = 1; n <= 3; ++n)
    for (int k = 1; k <= 6; ++k) {
      SuperPolynomial expected = constant(n, 0);
      for (int i = 1; i <= n; ++i) {
        expected += SuperPolynomial(n, xs(n, i).poly().pow(k));
        const SuperPolynomial yk(n, ys(n, i).poly().pow(k));
        if (k % 2) expected += yk;
        else expected -= yk;
      }
      EXPECT_EQ(specialize(power_sum(k), n), expected) << n << " " << k;
    }
}

TEST(SuperPoly, SpecializeMatchesBruteForceValues) {
  const EvalPoint pt({Rational(2), Rational(-1, 3), Rational(5, 2)}, {Rational(1, 7), Rational(-4), Rational(3, 5)});
  const auto hv = super_h_values(pt, 6);
  for (int k = 0; k <= 6; ++k) {
    EXPECT_EQ(hv[k], brute_super_h(pt, k)) << k;
    EXPECT_EQ(eval(specialize(h(k), 3), pt), hv[k]) << k;
  }
}

TEST(SuperPoly, SpecializeIsAHomomorphism) {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const LambdaElement f = random_element(rng, 5), g = random_element(rng, 5);
    const int n = 1 + trial % 3;
    EXPECT_EQ(specialize(f * g, n), specialize(f, n) * specialize(g, n));
    EXPECT_EQ(specialize(f + g, n), specialize(f, n) + specialize(g, n));
  }
}

TEST(SuperPoly, Stability) {
  for (int n = 2; n <= 4; ++n)
    for (int k = 1; k <= 6; ++k) EXPECT_EQ(restrict_last(specialize(h(k), n)), specialize(h(k), n - 1));
  EXPECT_EQ(restrict_last(specialize(h(2), 2)), specialize(h(2), 1));
}

TEST(SuperPoly, Supersymmetry) {
  EXPECT_TRUE(is_supersymmetric(xs(1, 1) + ys(1, 1)));
  EXPECT_FALSE(is_supersymmetric(xs(1, 1)));
  EXPECT_FALSE(is_supersymmetric(xs(2, 1) + ys(2, 1) + ys(2, 2)));
  EXPECT_FALSE(is_supersymmetric(xs(2, 1) * xs(2, 1) + xs(2, 2) * xs(2, 2) + ys(2, 1) * ys(2, 1) + ys(2, 2) * ys(2, 2)));
  std::mt19937 rng(8);
  for (int trial = 0; trial < 10; ++trial)
    EXPECT_TRUE(is_supersymmetric(specialize(random_element(rng, 5), 1 + trial % 3)));
  for (const auto& mu : partitions_up_to(5)) EXPECT_TRUE(is_supersymmetric(specialize(fs_function(mu), 2)));
}

TEST(SuperPoly, EvalExamples) {
  const EvalPoint half({Rational(1, 2)}, {Rational(1, 2)});
  EXPECT_EQ(eval(LambdaElement(1), half), 1);
  EXPECT_EQ(eval(h(1), half), 1);
  EXPECT_EQ(eval(fs_function(Partition({1})), diagram_point(Partition({2, 1}), ParameterSequence::fs(), 1)), 3);
  EXPECT_THROW(EvalPoint({Rational(1)}, {}), std::invalid_argument);
  // Missing coordinates count as zero, extra nonzero coordinates are rejected.
  const SuperPolynomial p = specialize(h(2), 2);
  EXPECT_EQ(eval(p, half), eval(h(2), half));
  EXPECT_THROW(eval(specialize(h(2), 1), EvalPoint({Rational(1), Rational(1)}, {Rational(0), Rational(0)})),
               std::invalid_argument);
  std::mt19937 rng(4);
  const EvalPoint pt({Rational(3), Rational(-1, 2)}, {Rational(2, 5), Rational(7)});
  for (int trial = 0; trial < 10; ++trial) {
    const LambdaElement f = random_element(rng, 6);
    EXPECT_EQ(eval(f, pt), eval(specialize(f, 2), pt));
  }
}

TEST(SuperPoly, ParsePoint) {
  const auto pt = EvalPoint::parse("x=1/2,3;y=0,-1");
  EXPECT_EQ(pt.x, (std::vector<Rational>{Rational(1, 2), Rational(3)}));
  EXPECT_EQ(pt.y, (std::vector<Rational>{Rational(0), Rational(-1)}));
  EXPECT_EQ(EvalPoint::parse("x=;y=").n(), 0);
  for (const char* bad : {"x=1", "x=1;y=", "y=1;x=1", "x=1;y=a"})
    EXPECT_THROW(EvalPoint::parse(bad), std::invalid_argument) << bad;
}

TEST(SuperPoly, DiagramPoints) {
  const auto fs = ParameterSequence::fs();
  const auto empty = diagram_point(Partition{}, fs, 3);
  EXPECT_EQ(empty.x, std::vector<Rational>(3));
  EXPECT_EQ(empty.y, std::vector<Rational>(3));
  const auto p21 = diagram_point(Partition({2, 1}), fs, 2);
  EXPECT_EQ(p21.x, (std::vector<Rational>{Rational(3, 2), Rational(0)}));
  EXPECT_EQ(p21.y, (std::vector<Rational>{Rational(3, 2), Rational(0)}));
  const auto z = diagram_point(Partition({2, 1}), ParameterSequence::zero(), 2);
  EXPECT_EQ(z.x, std::vector<Rational>(2));
  EXPECT_THROW(diagram_point(Partition({2, 2}), fs, 1), std::invalid_argument);
  // Modified Frobenius coordinates for fs.
  for (const auto& lambda : partitions_up_to(8)) {
    const auto c = frobenius(lambda);
    const auto pt = diagram_point(lambda, fs, c.depth());
    for (int i = 0; i < c.depth(); ++i) {
      EXPECT_EQ(pt.x[i], Rational(2 * c.p[i] + 1, 2));
      EXPECT_EQ(pt.y[i], Rational(2 * c.q[i] + 1, 2));
    }
  }
}

TEST(SuperPoly, SergeevPragaczExamples) {
  const auto fs = ParameterSequence::fs();
  EXPECT_EQ(sergeev_pragacz(Partition({1}), fs, 1), xs(1, 1) + ys(1, 1));
  EXPECT_EQ(sergeev_pragacz(Partition({1}), fs, 2), xs(2, 1) + xs(2, 2) + ys(2, 1) + ys(2, 2));
  EXPECT_EQ(sergeev_pragacz(Partition({2, 1}), fs, 2), specialize(fs_function(Partition({2, 1})), 2));
  EXPECT_THROW(sergeev_pragacz(Partition({2, 2}), fs, 1), std::invalid_argument);
}

TEST(SuperPoly, SergeevPragaczMatchesJacobiTrudi) {
  const std::vector<ParameterSequence> seqs{ParameterSequence::zero(), ParameterSequence::fs(),
                                            ParameterSequence::seeded_table(20240601)};
  for (const auto& a : seqs)
    for (const auto& mu : partitions_up_to(5))
      for (int n = std::max(1, mu.depth()); n <= 3; ++n) {
        const SuperPolynomial expected = specialize(s_multi(mu, a), n);
        EXPECT_EQ(sergeev_pragacz(mu, a, n, Antisymmetrizer::literal), expected) << mu.to_string() << " n=" << n;
        EXPECT_EQ(sergeev_pragacz(mu, a, n, Antisymmetrizer::factored), expected) << mu.to_string() << " n=" << n;
      }
}

TEST(SuperPoly, BereleRegevExamples) {
  const SuperPolynomial x = xs(1, 1), y = ys(1, 1);
  EXPECT_EQ(berele_regev_factor(Partition({1}), ParameterSequence::fs()), x + y);
  EXPECT_EQ(berele_regev_factor(Partition({2, 1}), ParameterSequence::zero()), x * y * (x + y));
  EXPECT_EQ(berele_regev_factor(Partition({2, 1}), ParameterSequence::zero()),
            specialize(schur(Partition({2, 1})), 1));
  const SuperPolynomial half = constant(1, Rational(1, 2));
  EXPECT_EQ(berele_regev_factor(Partition({2, 1}), ParameterSequence::fs()), (x - half) * (y - half) * (x + y));
  EXPECT_EQ(berele_regev_factor(Partition{}, ParameterSequence::fs()).poly(), Polynomial(1));
}

TEST(SuperPoly, BereleRegevMatchesJacobiTrudi) {
  for (const auto& a : injective_sequences())
    for (const auto& mu : partitions_up_to(8)) {
      if (mu.size() == 0) continue;
      EXPECT_EQ(berele_regev_factor(mu, a), specialize(s_multi(mu, a), mu.depth())) << mu.to_string();
    }
}

TEST(SuperPoly, SpecialValueExamples) {
  const auto fs = ParameterSequence::fs();
  for (auto route : {SpecialValueRoute::cell_product, SpecialValueRoute::frobenius_quotient}) {
    EXPECT_EQ(special_value(Partition({1}), fs, route).value, 1);
    EXPECT_EQ(special_value(Partition({2, 1}), fs, route).value, 3);
    EXPECT_EQ(special_value(Partition({2, 2}), fs, route).value, 12);
  }
  const auto a = ParameterSequence::affine(Rational(1, 3), -2);
  EXPECT_EQ(special_value(Partition({1}), a, SpecialValueRoute::cell_product).value, a[1] - a[0]);
}

TEST(SuperPoly, SpecialValueRoutesAgree) {
  for (const auto& a : {ParameterSequence::fs(), ParameterSequence::affine(Rational(1, 3), -2)})
    for (const auto& mu : partitions_up_to(7)) {
      const auto cells = special_value(mu, a, SpecialValueRoute::cell_product);
      const auto frob = special_value(mu, a, SpecialValueRoute::frobenius_quotient);
      EXPECT_FALSE(frob.fell_back);
      EXPECT_EQ(frob.route, SpecialValueRoute::frobenius_quotient);
      EXPECT_EQ(cells.value, frob.value) << mu.to_string();
    }
  for (const auto& mu : partitions_up_to(7)) {
    Rational hooks = 1;
    for (const auto& [cell, len] : hook_lengths(mu)) hooks *= len;
    EXPECT_EQ(special_value(mu, ParameterSequence::fs(), SpecialValueRoute::cell_product).value, hooks);
    EXPECT_EQ(hooks, factorial(mu.size()) / Rational(dim(mu, DimMethod::brute)));
  }
}

TEST(SuperPoly, SpecialValueMatchesEvaluation) {
  for (const auto& a : injective_sequences())
    for (const auto& mu : partitions_up_to(6)) {
      const Rational value = eval(s_multi(mu, a), diagram_point(mu, a, mu.depth()));
      EXPECT_NE(value, 0) << mu.to_string();
      EXPECT_EQ(value, special_value(mu, a, SpecialValueRoute::cell_product).value) << mu.to_string();
    }
}

TEST(SuperPoly, SpecialValueFallsBackOnCollisions) {
  const auto v = special_value(Partition({2, 2}), ParameterSequence::zero(), SpecialValueRoute::frobenius_quotient);
  EXPECT_TRUE(v.fell_back);
  EXPECT_EQ(v.route, SpecialValueRoute::cell_product);
  EXPECT_EQ(v.value, 0);
}

TEST(SuperPoly, FrobeniusIndexSetsPartition) {
  // {1..mu_i - i} is the disjoint union of {mu_j - j + 1 : i < j <= d} and
  // {j - mu'_j : d < j <= mu_i}.
  for (const auto& mu : partitions_up_to(8)) {
    const int d = mu.depth();
    const Partition conj = mu.conjugate();
    for (int i = 1; i <= d; ++i) {
      std::multiset<int> rhs;
      for (int j = i + 1; j <= d; ++j) rhs.insert(mu.row(j) - j + 1);
      for (int j = d + 1; j <= mu.row(i); ++j) rhs.insert(j - conj.row(j));
      std::multiset<int> lhs;
      for (int k = 1; k <= mu.row(i) - i; ++k) lhs.insert(k);
      EXPECT_EQ(lhs, rhs) << mu.to_string() << " i=" << i;
    }
  }
}

TEST(SuperPoly, VanishingExamples) {
  const auto fs = ParameterSequence::fs();
  EXPECT_TRUE(vanishing_check(Partition({2}), Partition({1, 1}), fs));
  EXPECT_FALSE(vanishing_check(Partition({2, 1}), Partition({2, 1}), fs));
  EXPECT_TRUE(vanishing_check(Partition({1, 1, 1}), Partition({3}), ParameterSequence::affine(1, 0)));
}

TEST(SuperPoly, VanishingSweep) {
  for (const auto& a : injective_sequences()) {
    const auto all = partitions_up_to(5);
    for (const auto& mu : all)
      for (const auto& lambda : all)
        if (!contains(mu, lambda)) EXPECT_TRUE(vanishing_check(mu, lambda, a)) << mu.to_string() << " at " << lambda.to_string();
  }
}

TEST(SuperPoly, InterpolationExamples) {
  const auto fs = ParameterSequence::fs();
  EXPECT_EQ(interpolation_solve(Partition({1}), fs), h(1));
  EXPECT_EQ(interpolation_solve(Partition({2}), fs), h(2) - Rational(1, 2) * h(1));
  EXPECT_EQ(interpolation_solve(Partition({2, 1}), fs), fs_function(Partition({2, 1})));
  EXPECT_EQ(interpolation_solve(Partition{}, fs), LambdaElement(1));
  // Colliding parameters make the system singular.
  EXPECT_THROW(interpolation_solve(Partition({2}), ParameterSequence::zero()), std::domain_error);
}

TEST(SuperPoly, InterpolationRecoversMultiSchur) {
  for (const auto& a : injective_sequences())
    for (const auto& mu : partitions_up_to(4)) EXPECT_EQ(interpolation_solve(mu, a), s_multi(mu, a)) << mu.to_string();
}
