#include <gtest/gtest.h>

#include <set>

#include "fsf/partition.hpp"

using namespace fsf;

namespace {

// Transposes the cell set directly instead of counting columns.
Partition transpose_cells(const Partition& mu) {
  std::map<int, int> column_lengths;
  for (const auto& c : SkewShape(mu).cells()) column_lengths[c.col] = std::max(column_lengths[c.col], c.row);
  std::vector<int> parts;
  for (const auto& [col, len] : column_lengths) parts.push_back(len);
  return Partition(parts);
}

}  // namespace

TEST(Partition, RejectsBadInput) {
  EXPECT_THROW(Partition({1, 2}), std::invalid_argument);
  EXPECT_THROW(Partition({2, -1}), std::invalid_argument);
  EXPECT_THROW(Partition::parse("2,x"), std::invalid_argument);
  EXPECT_THROW(Partition::parse("2,,1"), std::invalid_argument);
}

TEST(Partition, ParseAndPrint) {
  EXPECT_EQ(Partition::parse("4,2,2"), Partition({4, 2, 2}));
  EXPECT_EQ(Partition::parse(""), Partition{});
  EXPECT_EQ(Partition::parse("0"), Partition{});
  EXPECT_EQ(Partition::parse("3,1,0,0"), Partition({3, 1}));
  EXPECT_EQ(Partition({4, 2, 2}).to_string(), "4,2,2");
  EXPECT_EQ(Partition({4, 2, 2}).size(), 8);
  EXPECT_EQ(Partition({4, 2, 2}).length(), 3);
}

TEST(Partition, ConjugateExamples) {
  EXPECT_EQ(Partition{}.conjugate(), Partition{});
  EXPECT_EQ(Partition({2, 1}).conjugate(), Partition({2, 1}));
  EXPECT_EQ(Partition({4, 2, 2}).conjugate(), transpose_cells(Partition({4, 2, 2})));
  EXPECT_EQ(Partition({4, 2, 2}).conjugate(), Partition({3, 3, 1, 1}));
}

TEST(Partition, ConjugateIsInvolutionAndMatchesCellTranspose) {
  for (const auto& mu : partitions_up_to(10)) {
    EXPECT_EQ(mu.conjugate().conjugate(), mu);
    EXPECT_EQ(mu.conjugate(), transpose_cells(mu)) << mu.to_string();
    EXPECT_EQ(mu.conjugate().size(), mu.size());
  }
}

TEST(Partition, FrobeniusExamples) {
  EXPECT_EQ(frobenius(Partition{}), (FrobeniusCoords{{}, {}}));
  EXPECT_EQ(frobenius(Partition({2, 1})), (FrobeniusCoords{{1}, {1}}));
  EXPECT_EQ(frobenius(Partition({4, 2, 2})), (FrobeniusCoords{{3, 0}, {2, 1}}));
  EXPECT_EQ(from_frobenius({{1}, {1}}), Partition({2, 1}));
  EXPECT_EQ(from_frobenius({{0}, {0}}), Partition({1}));
  EXPECT_EQ(from_frobenius({{3, 0}, {2, 1}}), Partition({4, 2, 2}));
}

TEST(Partition, FrobeniusRejectsInvalid) {
  EXPECT_THROW(from_frobenius({{1, 1}, {2, 1}}), std::invalid_argument);
  EXPECT_THROW(from_frobenius({{1}, {}}), std::invalid_argument);
  EXPECT_THROW(from_frobenius({{-1}, {0}}), std::invalid_argument);
}

TEST(Partition, FrobeniusRoundTrip) {
  for (const auto& mu : partitions_up_to(10)) {
    const auto c = frobenius(mu);
    EXPECT_EQ(c.depth(), mu.depth());
    EXPECT_EQ(from_frobenius(c), mu) << mu.to_string();
    int diagonal = 0;
    for (const auto& cell : SkewShape(mu).cells()) diagonal += cell.row == cell.col;
    EXPECT_EQ(diagonal, c.depth());
  }
}

TEST(Partition, Contains) {
  for (const auto& nu : partitions_up_to(4)) EXPECT_TRUE(contains(Partition{}, nu));
  EXPECT_TRUE(contains(Partition({2, 1}), Partition({2, 1})));
  EXPECT_FALSE(contains(Partition({3}), Partition({2, 2})));
}

TEST(Partition, ContainsMatchesFrobeniusCriterion) {
  const auto all = partitions_up_to(7);
  for (const auto& mu : all)
    for (const auto& nu : all) {
      const auto a = frobenius(mu);
      const auto b = frobenius(nu);
      bool frob = a.depth() <= b.depth();
      for (int i = 0; frob && i < a.depth(); ++i) frob = a.p[i] <= b.p[i] && a.q[i] <= b.q[i];
      EXPECT_EQ(contains(mu, nu), frob) << mu.to_string() << " in " << nu.to_string();
    }
}

TEST(Partition, HooksAndContents) {
  auto h1 = hook_lengths(Partition({1}));
  EXPECT_EQ(h1.at({1, 1}), 1);
  auto h = hook_lengths(Partition({2, 1}));
  EXPECT_EQ(h.size(), 3u);
  EXPECT_EQ(h.at({1, 1}), 3);
  EXPECT_EQ(h.at({1, 2}), 1);
  EXPECT_EQ(h.at({2, 1}), 1);
  auto c = contents(SkewShape(Partition({4, 2, 2}), Partition({1, 1})));
  EXPECT_EQ(c.size(), 6u);
  EXPECT_EQ(c.at({1, 2}), 1);
  EXPECT_EQ(c.at({1, 3}), 2);
  EXPECT_EQ(c.at({1, 4}), 3);
  EXPECT_EQ(c.at({2, 2}), 0);
  EXPECT_EQ(c.at({3, 1}), -2);
  EXPECT_EQ(c.at({3, 2}), -1);
}

TEST(Partition, SkewShapeBasics) {
  EXPECT_THROW(SkewShape(Partition({2}), Partition({1, 1})), std::invalid_argument);
  const SkewShape s = SkewShape::parse("4,2,2/1,1");
  EXPECT_EQ(s.size(), 6);
  EXPECT_EQ(s.components(), 1);
  EXPECT_FALSE(s.has_2x2_block());
  EXPECT_TRUE(SkewShape(Partition({2, 2})).has_2x2_block());
  EXPECT_EQ(SkewShape(Partition({2, 1}), Partition({1})).components(), 2);
  EXPECT_EQ(SkewShape::parse("3,3").conjugate(), SkewShape(Partition({2, 2, 2})));
}

TEST(Partition, NoBlockCriterionMatchesCellScan) {
  for (const auto& outer : partitions_in_box(4, 4))
    for (const auto& inner : partitions_in_box(4, 4)) {
      if (!contains(inner, outer)) continue;
      const SkewShape s(outer, inner);
      bool block = false;
      for (const auto& c : s.cells())
        block = block || (s.has_cell(c.row, c.col + 1) && s.has_cell(c.row + 1, c.col) &&
                          s.has_cell(c.row + 1, c.col + 1));
      EXPECT_EQ(s.has_2x2_block(), block) << s.to_string();
    }
}

TEST(Partition, DimExamples) {
  for (auto method : {DimMethod::brute, DimMethod::hook, DimMethod::determinant}) {
    EXPECT_EQ(dim(Partition{}, method), 1);
    EXPECT_EQ(dim(Partition({2, 1}), method), 2);
    EXPECT_EQ(dim(Partition({3, 2}), method), 5);
  }
  for (auto method : {SkewDimMethod::brute, SkewDimMethod::determinant}) {
    EXPECT_EQ(dim_skew(Partition({2, 1}), Partition({2, 1}), method), 1);
    EXPECT_EQ(dim_skew(Partition({3}), Partition({2, 2}), method), 0);
    EXPECT_EQ(dim_skew(Partition({1}), Partition({2, 1}), method), 2);
  }
}

TEST(Partition, DimMethodsAgree) {
  for (const auto& nu : partitions_up_to(8)) {
    const Integer brute = dim(nu, DimMethod::brute);
    EXPECT_EQ(dim(nu, DimMethod::hook), brute) << nu.to_string();
    EXPECT_EQ(dim(nu, DimMethod::determinant), brute) << nu.to_string();
  }
}

TEST(Partition, SkewDimMethodsAgree) {
  const auto all = partitions_up_to(8);
  for (const auto& nu : all)
    for (const auto& mu : all) {
      if (mu.size() > nu.size()) continue;
      EXPECT_EQ(dim_skew(mu, nu, SkewDimMethod::determinant), dim_skew(mu, nu, SkewDimMethod::brute))
          << mu.to_string() << " / " << nu.to_string();
    }
}

TEST(Partition, BruteForceCapIsEnforced) {
  EXPECT_THROW(dim(Partition({13}), DimMethod::brute), std::domain_error);
  EXPECT_NO_THROW(dim_skew(Partition({1}), Partition({13}), SkewDimMethod::brute));
  EXPECT_EQ(dim(Partition({13}), DimMethod::hook), 1);
}

TEST(Partition, PartitionCounts) {
  const int expected[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (int n = 0; n <= 10; ++n) EXPECT_EQ(static_cast<int>(partitions_of(n).size()), expected[n]);
  const auto p4 = partitions_of(4);
  EXPECT_EQ(p4.front(), Partition({4}));
  EXPECT_EQ(p4[1], Partition({3, 1}));
  EXPECT_EQ(p4.back(), Partition({1, 1, 1, 1}));
}

TEST(Partition, ContentSetsAreDisjoint) {
  // {mu_i - i + 1} and {j - mu'_j} never meet.
  for (const auto& mu : partitions_up_to(10)) {
    const Partition conj = mu.conjugate();
    const int window = std::max(mu.length(), mu.row(1)) + 2;
    std::set<int> rows, cols;
    for (int i = 1; i <= window; ++i) rows.insert(mu.row(i) - i + 1);
    for (int j = 1; j <= window; ++j) cols.insert(j - conj.row(j));
    for (int r : rows) EXPECT_EQ(cols.count(r), 0u) << mu.to_string();
  }
}
