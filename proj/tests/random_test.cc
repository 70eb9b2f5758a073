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

#include "hyperiso/random.h"

#include <algorithm>
#include <cmath>
#include <vector>

#include "gtest/gtest.h"

namespace hyperiso {
namespace {

TEST(SplitMix64Test, MatchesReferenceStream) {
  // First outputs of the reference SplitMix64 seeded with 1234567.
  SplitMix64 rng(1234567);
  EXPECT_EQ(rng(), 6457827717110365317ULL);
  EXPECT_EQ(rng(), 3203168211198807973ULL);
  EXPECT_EQ(rng(), 9817491932198370423ULL);
  EXPECT_EQ(rng(), 4593380528125082431ULL);
  EXPECT_EQ(rng(), 16408922859458223821ULL);
}

TEST(SplitMix64Test, DerivedSeedsAreDistinctAndStable) {
  std::vector<std::uint64_t> seeds;
  for (std::uint64_t t = 0; t < 1000; ++t) seeds.push_back(DeriveSeed(7, t));
  std::sort(seeds.begin(), seeds.end());
  EXPECT_EQ(std::unique(seeds.begin(), seeds.end()), seeds.end());
  EXPECT_EQ(DeriveSeed(7, 3), DeriveSeed(7, 3));
  EXPECT_NE(DeriveSeed(7, 3), DeriveSeed(8, 3));
}

TEST(SplitMix64Test, BelowIsUniform) {
  SplitMix64 rng(99);
  constexpr int kBound = 7;
  constexpr int kDraws = 70000;
  std::vector<int> counts(kBound, 0);
  for (int i = 0; i < kDraws; ++i) {
    const auto x = rng.Below(kBound);
    ASSERT_LT(x, static_cast<std::uint64_t>(kBound));
    ++counts[x];
  }
  const double expected = static_cast<double>(kDraws) / kBound;
  const double sigma = std::sqrt(kDraws * (1.0 / kBound) * (1 - 1.0 / kBound));
  for (int c : counts) EXPECT_LT(std::abs(c - expected), 4 * sigma);
}

TEST(SplitMix64Test, Uniform01InRange) {
  SplitMix64 rng(1);
  double sum = 0;
  for (int i = 0; i < 10000; ++i) {
    const double u = rng.Uniform01();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    sum += u;
  }
  EXPECT_NEAR(sum / 10000, 0.5, 0.02);
}

TEST(RandomPermutationTest, IsPermutation) {
  SplitMix64 rng(4);
  auto perm = RandomPermutation(rng, 50);
  std::sort(perm.begin(), perm.end());
  for (std::uint32_t i = 0; i < 50; ++i) EXPECT_EQ(perm[i], i);
}

}  // namespace
}  // namespace hyperiso
