#include <gtest/gtest.h>

#include <bit>

#include "fsf/multiparam.hpp"

using namespace fsf;

namespace {

LambdaElement h(int k) { return LambdaElement::h(k); }
LambdaElement e(int k) { return e_gen(k); }

std::vector<ParameterSequence> sequences() {
  return {ParameterSequence::zero(), ParameterSequence::fs(), ParameterSequence::affine(Rational(1, 3), -2),
          ParameterSequence::seeded_table(20240601)};
}

}  // namespace

TEST(MultiParam, HExamples) {
  for (const auto& a : sequences()) {
    EXPECT_EQ(h_multi(0, a), LambdaElement(1));
    EXPECT_EQ(h_multi(1, a), h(1));
    EXPECT_EQ(h_multi(2, a), h(2) - a[1] * h(1));
    EXPECT_TRUE(h_multi(-1, a).is_zero());
  }
  EXPECT_EQ(h_multi(2, ParameterSequence::fs()), h(2) - Rational(1, 2) * h(1));
}

TEST(MultiParam, EExamples) {
  for (const auto& a : sequences()) {
    EXPECT_EQ(e_multi(1, a), e(1));
    EXPECT_EQ(e_multi(2, a), e(2) + a[0] * e(1));
  }
}

TEST(MultiParam, TopComponentIsClassical) {
  for (const auto& a : sequences())
    for (int k = 0; k <= 8; ++k) {
      EXPECT_EQ(h_multi(k, a).top_component(), h(k));
      EXPECT_EQ(e_multi(k, a).top_component(), e(k));
    }
}

TEST(MultiParam, OmegaExchangesHAndE) {
  for (const auto& a : sequences())
    for (int k = 0; k <= 7; ++k) EXPECT_EQ(omega(h_multi(k, a)), e_multi(k, a.dual())) << a.to_string() << " " << k;
}

TEST(MultiParam, GeneratingSeries) {
  for (const auto& a : sequences()) {
    EXPECT_TRUE(h_series_check(h_multi_all(a, 8), a, 8)) << a.to_string();
    EXPECT_TRUE(e_series_check(e_multi_all(a, 8), a, 8)) << a.to_string();
    // A perturbed coefficient must be caught.
    auto wrong = h_multi_all(a, 4);
    wrong[3] += LambdaElement(1);
    EXPECT_FALSE(h_series_check(wrong, a, 4));
  }
}

TEST(MultiParam, SchurExamples) {
  for (int k = 0; k <= 5; ++k) EXPECT_EQ(s_multi(Partition({k}), ParameterSequence::zero()), h(k));
  for (const auto& a : sequences()) {
    EXPECT_EQ(s_multi(Partition({1}), a), h(1));
    EXPECT_EQ(s_multi(Partition({1, 1}), a), e(2) + a[0] * e(1)) << a.to_string();
    EXPECT_EQ(s_multi(Partition{}, a), LambdaElement(1));
  }
}

TEST(MultiParam, RoutesAgreeSmall) {
  for (const auto& a : sequences())
    for (const auto& mu : partitions_up_to(6)) {
      const LambdaElement jt = s_multi(mu, a, SchurRoute::jacobi_trudi);
      EXPECT_EQ(s_multi(mu, a, SchurRoute::nagelsbach_kostka), jt) << mu.to_string() << " " << a.to_string();
      EXPECT_EQ(s_multi(mu, a, SchurRoute::giambelli), jt) << mu.to_string() << " " << a.to_string();
      EXPECT_EQ(expand_in_schur(jt.top_component()), (SchurExpansion{{mu, 1}}));
    }
}

TEST(MultiParam, ZeroSequenceGivesClassicalSchur) {
  for (const auto& mu : partitions_up_to(7)) EXPECT_EQ(s_multi(mu, ParameterSequence::zero()), schur(mu));
}

TEST(MultiParam, FsExamples) {
  EXPECT_EQ(expand_in_schur(fs_function(Partition({1}))), (SchurExpansion{{Partition({1}), 1}}));
  EXPECT_EQ(expand_in_schur(fs_function(Partition({2}))),
            (SchurExpansion{{Partition({2}), 1}, {Partition({1}), Rational(-1, 2)}}));
  EXPECT_EQ(expand_in_schur(fs_function(Partition({2, 1}))),
            (SchurExpansion{{Partition({2, 1}), 1},
                            {Partition({2}), Rational(-1, 2)},
                            {Partition({1, 1}), Rational(-1, 2)},
                            {Partition({1}), Rational(1, 4)}}));
}

TEST(MultiParam, FsTShiftForm) {
  for (const auto& mu : partitions_up_to(7))
    EXPECT_EQ(fs_function_by_t_shift(mu), fs_function(mu)) << mu.to_string();
}

TEST(MultiParam, FsDuality) {
  for (const auto& mu : partitions_up_to(6)) EXPECT_EQ(omega(fs_function(mu)), fs_function(mu.conjugate()));
}

TEST(MultiParam, DualityGeneral) {
  for (const auto& a : sequences())
    for (const auto& mu : partitions_up_to(5))
      EXPECT_EQ(omega(s_multi(mu, a)), s_multi(mu.conjugate(), a.dual())) << mu.to_string() << " " << a.to_string();
}

TEST(MultiParam, SkewExamples) {
  for (const auto& a : sequences()) {
    for (const auto& lambda : partitions_up_to(5)) {
      EXPECT_EQ(s_multi_skew(lambda, lambda, a), LambdaElement(1));
      EXPECT_EQ(s_multi_skew(lambda, Partition{}, a), s_multi(lambda, a));
    }
    EXPECT_TRUE(s_multi_skew(Partition({2, 2}), Partition({3}), a).is_zero());
    EXPECT_TRUE(s_multi_skew(Partition({1, 1}), Partition({2}), a).is_zero());
  }
  EXPECT_EQ(s_multi_skew(Partition({2, 1}), Partition({1}), ParameterSequence::zero()), h(1) * h(1));
}

TEST(MultiParam, SkewVanishesUnlessContained) {
  const auto a = ParameterSequence::seeded_table(9);
  const auto all = partitions_up_to(4);
  for (const auto& lambda : all)
    for (const auto& mu : all)
      if (!contains(mu, lambda)) EXPECT_TRUE(s_multi_skew(lambda, mu, a).is_zero()) << lambda.to_string() << "/" << mu.to_string();
}

TEST(MultiParam, TransitionCoefficientExamples) {
  const auto fs = ParameterSequence::fs();
  const auto zero = ParameterSequence::zero();
  for (const auto& a : sequences())
    for (const auto& b : sequences())
      for (int p = 0; p <= 5; ++p) EXPECT_EQ(transition_coeff(p, p, a, b), 1);
  EXPECT_EQ(transition_coeff(1, 0, fs, zero), Rational(-1, 2));
  EXPECT_EQ(transition_coeff(2, 1, fs, zero), -2);
  EXPECT_EQ(transition_coeff(1, 2, fs, zero), 0);
  EXPECT_EQ(transition_coeff(2, -1, fs, zero), 0);
}

TEST(MultiParam, TransitionToZeroIsSignedElementary) {
  // b = 0 gives (-1)^{p-p'} e_{p-p'}(a_1, ..., a_p).
  const auto a = ParameterSequence::affine(Rational(1, 3), -2);
  for (int p = 0; p <= 5; ++p)
    for (int pp = 0; pp <= p; ++pp) {
      const int k = p - pp;
      Rational ek = 0;
      for (unsigned mask = 0; mask < (1u << p); ++mask) {
        if (std::popcount(mask) != static_cast<unsigned>(k)) continue;
        Rational prod = 1;
        for (int i = 0; i < p; ++i)
          if (mask & (1u << i)) prod *= a[i + 1];
        ek += prod;
      }
      EXPECT_EQ(transition_coeff(p, pp, a, ParameterSequence::zero()), k % 2 ? -ek : ek);
    }
}

TEST(MultiParam, TransitionRows) {
  const auto fs = ParameterSequence::fs();
  const auto zero = ParameterSequence::zero();
  EXPECT_EQ(transition_row(Partition({1}), fs, zero), (SchurExpansion{{Partition({1}), 1}}));
  EXPECT_EQ(transition_row(Partition({2}), fs, zero),
            (SchurExpansion{{Partition({2}), 1}, {Partition({1}), Rational(-1, 2)}}));
  EXPECT_EQ(transition_row(Partition({2, 1}), fs, zero),
            (SchurExpansion{{Partition({2, 1}), 1},
                            {Partition({2}), Rational(-1, 2)},
                            {Partition({1, 1}), Rational(-1, 2)},
                            {Partition({1}), Rational(1, 4)}}));
}

TEST(MultiParam, TransitionReconstructs) {
  const std::vector<std::pair<ParameterSequence, ParameterSequence>> pairs{
      {ParameterSequence::fs(), ParameterSequence::zero()},
      {ParameterSequence::zero(), ParameterSequence::fs()},
      {ParameterSequence::affine(Rational(1, 3), -2), ParameterSequence::seeded_table(77)}};
  for (const auto& [a, b] : pairs)
    for (const auto& mu : partitions_up_to(5)) {
      LambdaElement sum;
      for (const auto& [nu, c] : transition_row(mu, a, b)) {
        EXPECT_TRUE(contains(nu, mu));
        EXPECT_EQ(nu.depth(), mu.depth());
        sum += c * s_multi(nu, b);
      }
      EXPECT_EQ(sum, s_multi(mu, a)) << mu.to_string() << " " << a.to_string() << " -> " << b.to_string();
    }
}

TEST(MultiParam, HookIdentity) {
  for (const auto& a : sequences())
    for (int p = 0; p <= 3; ++p)
      for (int q = 0; q <= 3; ++q) EXPECT_TRUE(hook_identity_check(p, q, a)) << p << " " << q << " " << a.to_string();
  EXPECT_TRUE(hook_identity_check(1, 2, ParameterSequence::affine(Rational(1, 3), -2)));
  // For fs the scalar is p + q + 1.
  for (int p = 0; p <= 3; ++p)
    for (int q = 0; q <= 3; ++q) {
      const auto fs = ParameterSequence::fs();
      EXPECT_EQ(fs[p + 1] + fs.dual()[q + 1], p + q + 1);
    }
}

TEST(MultiParam, HookSeries) {
  EXPECT_TRUE(hook_series_check(ParameterSequence::fs(), 3));
  EXPECT_TRUE(hook_series_check(ParameterSequence::zero(), 3));
  EXPECT_TRUE(hook_series_check(ParameterSequence::affine(Rational(1, 3), -2), 3));
}

TEST(MultiParam, TransitionRowsCompose) {
  // c(a,c) = c(a,b) * c(b,c) as matrices.
  const auto a = ParameterSequence::fs();
  const auto b = ParameterSequence::affine(Rational(1, 3), -2);
  const auto c = ParameterSequence::seeded_table(7);
  for (const auto& mu : partitions_up_to(6)) {
    SchurExpansion composed;
    for (const auto& [nu, x] : transition_row(mu, a, b))
      for (const auto& [rho, y] : transition_row(nu, b, c)) composed[rho] += x * y;
    std::erase_if(composed, [](const auto& kv) { return kv.second == 0; });
    EXPECT_EQ(composed, transition_row(mu, a, c)) << mu.to_string();
  }
}
