#include <gtest/gtest.h>

#include "fsf/verify.hpp"

using namespace fsf;

TEST(Verify, EverySuiteRunsCleanAtSmallBounds) {
  VerifyOptions o;
  o.max_size = 3;
  o.max_mu = 3;
  o.max_lambda = 4;
  o.n = 2;
  for (const auto& name : suite_names()) {
    const VerificationReport r = run_suite(name, o);
    EXPECT_EQ(r.suite, name);
    EXPECT_GT(r.cases_run, 0u) << name;
    EXPECT_TRUE(r.ok()) << name << ": " << (r.ok() ? "" : r.failures.front().actual);
  }
}

TEST(Verify, UnknownSuiteThrows) { EXPECT_THROW(run_suite("nope", {}), std::invalid_argument); }

TEST(Verify, SequenceOverrideAndTransitionPair) {
  VerifyOptions o;
  o.max_size = 4;
  o.sequences = {ParameterSequence::affine(2, Rational(1, 5))};
  EXPECT_TRUE(run_suite("giambelli", o).ok());
  EXPECT_TRUE(run_suite("duality", o).ok());
  o.from = ParameterSequence::parse("affine:2:1/5");
  o.to = ParameterSequence::fs();
  const auto r = run_suite("transition", o);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.cases_run, 12u);  // partitions of size <= 4
}

TEST(Verify, SamplePoint) {
  EXPECT_EQ(sample_point(0).n(), 0);
  EXPECT_EQ(sample_point(5).n(), 5);
  EXPECT_THROW(sample_point(6), std::invalid_argument);
}

TEST(Verify, ReportsAreDeterministic) {
  VerifyOptions o;
  o.max_size = 4;
  const auto a = run_suite("vanishing", o);
  const auto b = run_suite("vanishing", o);
  EXPECT_EQ(a.cases_run, b.cases_run);
  EXPECT_EQ(a.failures.size(), b.failures.size());
}
