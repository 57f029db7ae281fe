#include <gtest/gtest.h>

#include <random>

#include "fsf/linalg.hpp"
#include "fsf/polynomial.hpp"

using namespace fsf;

namespace {

Polynomial random_polynomial(std::mt19937& rng, int vars, int terms, int max_exp) {
  std::uniform_int_distribution<int> exp(0, max_exp), coeff(-9, 9), den(1, 4);
  Polynomial p;
  for (int t = 0; t < terms; ++t) {
    std::vector<int> e(vars);
    for (auto& x : e) x = exp(rng);
    p += Polynomial::monomial(e, Rational(coeff(rng), den(rng)));
  }
  return p;
}

}  // namespace

TEST(Polynomial, Arithmetic) {
  const Polynomial x = Polynomial::variable(0), y = Polynomial::variable(1);
  const Polynomial p = (x + y) * (x - y);
  EXPECT_EQ(p, x * x - y * y);
  EXPECT_EQ(p.total_degree(), 2);
  EXPECT_EQ(p.degree_in(1), 2);
  EXPECT_EQ((x - x).total_degree(), -1);
  EXPECT_TRUE((p - p).is_zero());
  EXPECT_EQ(p.evaluate({Rational(3), Rational(1, 2)}), Rational(35, 4));
  EXPECT_EQ((x + Polynomial(1)).pow(3).coefficient(Polynomial::pack({2})), 3);
}

TEST(Polynomial, LeadingTermIsLex) {
  const Polynomial x = Polynomial::variable(0), y = Polynomial::variable(1);
  const Polynomial p = y.pow(5) + x;
  EXPECT_EQ(p.terms().front().first, Polynomial::pack({1, 0}));
}

TEST(Polynomial, OverflowDetected) {
  const Polynomial x = Polynomial::variable(3);
  EXPECT_NO_THROW(x.pow(Polynomial::kMaxExponent));
  EXPECT_THROW(x.pow(Polynomial::kMaxExponent + 1), std::overflow_error);
  EXPECT_THROW(Polynomial::variable(Polynomial::kMaxVars), std::out_of_range);
}

TEST(Polynomial, RingAxioms) {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 40; ++trial) {
    const Polynomial a = random_polynomial(rng, 3, 5, 3);
    const Polynomial b = random_polynomial(rng, 3, 5, 3);
    const Polynomial c = random_polynomial(rng, 3, 4, 2);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    const std::vector<Rational> pt{Rational(2, 3), Rational(-5), Rational(1, 7)};
    EXPECT_EQ((a * b).evaluate(pt), a.evaluate(pt) * b.evaluate(pt));
  }
}

TEST(Polynomial, DivideByDifference) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    const Polynomial q = random_polynomial(rng, 4, 6, 3);
    const int i = trial % 4, k = (trial + 1 + trial / 4 % 3) % 4;
    if (i == k) continue;
    const Polynomial d = Polynomial::variable(i) - Polynomial::variable(k);
    EXPECT_EQ((q * d).divide_by_difference(i, k), q);
  }
  const Polynomial x = Polynomial::variable(0), y = Polynomial::variable(1);
  EXPECT_THROW((x * x + y).divide_by_difference(0, 1), std::domain_error);
}

TEST(Polynomial, SubstituteAndRemap) {
  const Polynomial x = Polynomial::variable(0), y = Polynomial::variable(1), z = Polynomial::variable(2);
  const Polynomial p = x * x * y + z;
  EXPECT_EQ(p.substitute(0, y + Polynomial(1)), (y + Polynomial(1)).pow(2) * y + z);
  EXPECT_EQ(p.remap({1, 0, 2}), y * y * x + z);
  EXPECT_EQ(p.remap({0, -1, 1}), y);
  std::mt19937 rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    const Polynomial a = random_polynomial(rng, 3, 6, 3);
    const Polynomial b = random_polynomial(rng, 3, 3, 2);
    const std::vector<Rational> pt{Rational(1, 2), Rational(-3), Rational(4, 5)};
    std::vector<Rational> moved = pt;
    moved[1] = b.evaluate(pt);
    EXPECT_EQ(a.substitute(1, b).evaluate(pt), a.evaluate(moved));
  }
}

TEST(Determinant, RingMatchesRational) {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> v(-5, 5);
  for (int n = 0; n <= 6; ++n) {
    RationalMatrix m(n, std::vector<Rational>(n));
    for (auto& row : m)
      for (auto& x : row) x = Rational(v(rng), 1 + (v(rng) + 5) % 3);
    EXPECT_EQ(ring_determinant(m, Rational(1)), determinant(m));
  }
  RationalMatrix singular{{1, 2}, {2, 4}};
  EXPECT_EQ(determinant(singular), 0);
  EXPECT_THROW(inverse(singular), std::domain_error);
}

TEST(Determinant, PolynomialVandermonde) {
  // det[x_i^{j-1}] = prod_{i<k} (x_k - x_i).
  const int n = 4;
  std::vector<std::vector<Polynomial>> m(n, std::vector<Polynomial>(n));
  Polynomial expected(1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = Polynomial::variable(i).pow(j);
  for (int i = 0; i < n; ++i)
    for (int k = i + 1; k < n; ++k) expected = expected * (Polynomial::variable(k) - Polynomial::variable(i));
  EXPECT_EQ(ring_determinant(m, Polynomial(1)), expected);
}

TEST(LinearSolve, OverdeterminedConsistent) {
  RationalMatrix a{{1, 1}, {1, -1}, {2, 0}};
  const auto x = solve_unique(a, {Rational(3), Rational(1), Rational(4)});
  ASSERT_EQ(x.size(), 2u);
  EXPECT_EQ(x[0], 2);
  EXPECT_EQ(x[1], 1);
  EXPECT_THROW(solve_unique(a, {Rational(3), Rational(1), Rational(5)}), std::domain_error);
  EXPECT_THROW(solve_unique({{1, 1}, {2, 2}}, {Rational(1), Rational(2)}), std::domain_error);
}

TEST(Rational, Parse) {
  EXPECT_EQ(parse_rational("3/6"), Rational(1, 2));
  EXPECT_EQ(parse_rational("-4"), -4);
  EXPECT_EQ(to_string(Rational(-6, 4)), "-3/2");
  for (const char* bad : {"", "1/", "/2", "1/0", "a", "1/-2", "1.5"})
    EXPECT_THROW(parse_rational(bad), std::invalid_argument) << bad;
}
