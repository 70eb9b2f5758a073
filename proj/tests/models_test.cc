// Copyright 2026 The hyperiso Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hyperiso/models.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <vector>

#include "gtest/gtest.h"
#include "hyperiso/random.h"

namespace hyperiso {
namespace {

using Partition = std::vector<std::vector<std::uint32_t>>;

Partition Canonical(Partition blocks) {
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  std::sort(blocks.begin(), blocks.end());
  return blocks;
}

// All partitions of {0..5} into two blocks of size 3 (the block holding 0
// determines the partition).
std::vector<Partition> AllPairsOfTriples() {
  std::vector<Partition> out;
  for (std::uint32_t a = 1; a < 6; ++a) {
    for (std::uint32_t b = a + 1; b < 6; ++b) {
      std::vector<std::uint32_t> first{0, a, b};
      std::vector<std::uint32_t> second;
      for (std::uint32_t x = 1; x < 6; ++x) {
        if (x != a && x != b) second.push_back(x);
      }
      out.push_back(Canonical({first, second}));
    }
  }
  return out;
}

TEST(Binomial64Test, SmallValuesAndOverflow) {
  EXPECT_EQ(Binomial64(10, 3), 120u);
  EXPECT_EQ(Binomial64(5, 0), 1u);
  EXPECT_EQ(Binomial64(3, 5), 0u);
  EXPECT_EQ(Binomial64(62, 31), 465428353255261088ULL);
  EXPECT_THROW(Binomial64(200, 100), std::overflow_error);
}

TEST(ColexTest, RankUnrankRoundTripAndOrder) {
  const int n = 9;
  for (int k = 1; k <= 4; ++k) {
    const std::uint64_t total = Binomial64(n, k);
    std::vector<Vertex> prev;
    for (std::uint64_t rank = 0; rank < total; ++rank) {
      std::vector<Vertex> subset(k);
      ColexUnrank(rank, k, subset);
      ASSERT_TRUE(std::is_sorted(subset.begin(), subset.end()));
      ASSERT_EQ(std::adjacent_find(subset.begin(), subset.end()), subset.end());
      ASSERT_LT(subset.back(), static_cast<Vertex>(n));
      ASSERT_EQ(ColexRank(subset), rank);
      if (!prev.empty()) {
        // Colex: compare reversed sequences lexicographically.
        ASSERT_TRUE(std::lexicographical_compare(prev.rbegin(), prev.rend(),
                                                 subset.rbegin(),
                                                 subset.rend()));
      }
      prev = subset;
    }
  }
}

TEST(GenBinomialTest, ExtremeProbabilities) {
  EXPECT_EQ(GenBinomial({10, 3, 0.0, 1}).num_edges(), 0u);
  EXPECT_EQ(GenBinomial({10, 3, 1.0, 1}).num_edges(), 120u);
}

TEST(GenBinomialTest, RejectsInvalidP) {
  EXPECT_THROW(GenBinomial({10, 3, -0.1, 1}), std::invalid_argument);
  EXPECT_THROW(GenBinomial({10, 3, 1.5, 1}), std::invalid_argument);
  EXPECT_THROW(GenBinomial({10, 3, std::nan(""), 1}), std::invalid_argument);
}

TEST(GenBinomialTest, DeterministicPerSeed) {
  EXPECT_EQ(GenBinomial({20, 3, 0.3, 42}), GenBinomial({20, 3, 0.3, 42}));
  EXPECT_NE(GenBinomial({20, 3, 0.3, 42}), GenBinomial({20, 3, 0.3, 43}));
}

TEST(GenBinomialTest, EdgeCountMomentsMatchBinomial) {
  constexpr int kDraws = 10000;
  const double total = 120;
  const double p = 0.5;
  std::vector<double> counts;
  for (int i = 0; i < kDraws; ++i) {
    counts.push_back(GenBinomial({10, 3, p, DeriveSeed(17, i)}).num_edges());
  }
  double mean = 0;
  for (double c : counts) mean += c;
  mean /= kDraws;
  double var = 0;
  for (double c : counts) var += (c - mean) * (c - mean);
  var /= kDraws - 1;
  const double sigma2 = total * p * (1 - p);  // 30
  EXPECT_NEAR(mean, total * p, 3 * std::sqrt(sigma2 / kDraws));
  EXPECT_NEAR(var, sigma2, 3 * sigma2 * std::sqrt(2.0 / (kDraws - 1)));
}

TEST(GenBinomialTest, EachKSetEquallyLikely) {
  // Per-position inclusion frequency at small p, where skipping matters.
  constexpr int kDraws = 20000;
  const double p = 0.05;
  std::vector<int> hits(Binomial64(8, 3), 0);
  for (int i = 0; i < kDraws; ++i) {
    const Hypergraph h = GenBinomial({8, 3, p, DeriveSeed(5, i)});
    for (std::size_t e = 0; e < h.num_edges(); ++e) ++hits[ColexRank(h.edge(e))];
  }
  const double sigma = std::sqrt(kDraws * p * (1 - p));
  for (int c : hits) EXPECT_NEAR(c, kDraws * p, 4.5 * sigma);
}

TEST(GenConfigurationTest, SmallShapes) {
  const auto draw = GenConfiguration({3, 3, 2, 9});
  EXPECT_EQ(draw.config.num_blocks(), 2u);
  EXPECT_EQ(draw.projected.degrees(), (std::vector<std::size_t>{2, 2, 2}));
  EXPECT_EQ(GenConfiguration({4, 3, 3, 9}).config.num_blocks(), 4u);
  EXPECT_THROW(GenConfiguration({4, 3, 2, 9}), std::invalid_argument);
}

TEST(GenConfigurationTest, BlocksPartitionPointsAndDegreesExact) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto draw = GenConfiguration({30, 3, 3, seed});
    std::vector<std::uint32_t> all;
    for (const auto& b : draw.config.blocks) {
      ASSERT_EQ(b.size(), 3u);
      all.insert(all.end(), b.begin(), b.end());
    }
    std::sort(all.begin(), all.end());
    for (std::uint32_t i = 0; i < all.size(); ++i) ASSERT_EQ(all[i], i);
    ASSERT_EQ(all.size(), 90u);
    for (std::size_t d : draw.projected.degrees()) ASSERT_EQ(d, 3u);
  }
}

TEST(GenConfigurationTest, PartitionDistributionIsUniform) {
  const auto partitions = AllPairsOfTriples();
  ASSERT_EQ(partitions.size(), 10u);
  std::map<Partition, int> counts;
  constexpr int kDraws = 100000;
  for (int i = 0; i < kDraws; ++i) {
    ++counts[Canonical(GenConfiguration({3, 3, 2, DeriveSeed(77, i)})
                           .config.blocks)];
  }
  ASSERT_EQ(counts.size(), 10u);
  const double expected = kDraws / 10.0;
  const double sigma = std::sqrt(kDraws * 0.1 * 0.9);
  double chi2 = 0;
  for (const auto& part : partitions) {
    const int c = counts[part];
    EXPECT_LT(std::abs(c - expected), 3 * sigma);
    chi2 += (c - expected) * (c - expected) / expected;
  }
  EXPECT_LT(chi2, 27.88);  // chi-square(9) 0.999 quantile
}

TEST(GenRegularSimpleTest, ImpossibleInstanceExhausts) {
  // Enumerating all 10 configurations: each block must contain all three
  // vertices to be simple, forcing a duplicate edge.
  int simple = 0;
  for (const auto& part : AllPairsOfTriples()) {
    Configuration config{3, 2, 3, part};
    simple += Project(config).is_simple();
  }
  EXPECT_EQ(simple, 0);
  EXPECT_THROW(GenRegularSimple({3, 3, 2, 1}, 1000), RejectionExhausted);
}

TEST(GenRegularSimpleTest, SucceedsAndIsRegular) {
  int total_tries = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const RegularDraw draw = GenRegularSimple({30, 3, 3, seed}, 1000);
    total_tries += draw.tries;
    EXPECT_EQ(draw.hypergraph.num_edges(), 30u);
    for (std::size_t d : draw.hypergraph.degrees()) EXPECT_EQ(d, 3u);
    EXPECT_EQ(draw.hypergraph, GenRegularSimple({30, 3, 3, seed}, 1000).hypergraph);
  }
  EXPECT_LT(total_tries / 20.0, 50.0);
}

TEST(ValidateThresholdTest, Ratios) {
  const auto report = ValidateThreshold(60, 3, 0.3);
  EXPECT_NEAR(report.p_ratio, 0.3 / (std::log(60.0) / 60.0), 1e-12);
  EXPECT_NEAR(report.p_ratio, 4.3965, 1e-3);
  EXPECT_EQ(report.status, RegimeStatus::kInRegime);

  const double boundary = std::log(60.0) / 60.0;
  const auto edge = ValidateThreshold(60, 3, boundary);
  EXPECT_NEAR(edge.p_ratio, 1.0, 1e-12);
  EXPECT_EQ(edge.status, RegimeStatus::kBoundary);

  EXPECT_EQ(ValidateThreshold(60, 3, 0.001).status, RegimeStatus::kOutside);
  EXPECT_EQ(ValidateThreshold(60, 3, 0.999).status, RegimeStatus::kOutside);
}

}  // namespace
}  // namespace hyperiso
