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
#include <limits>
#include <numeric>
#include <string>

#include "hyperiso/random.h"

namespace hyperiso {

void Validate(const BinomialParams& params) {
  if (params.k < 2) throw std::invalid_argument("k must be >= 2");
  if (params.n < params.k) throw std::invalid_argument("n must be >= k");
  if (!(params.p >= 0.0 && params.p <= 1.0)) {
    throw std::invalid_argument("p must lie in [0, 1], got " +
                                std::to_string(params.p));
  }
}

void Validate(const RegularParams& params) {
  if (params.k < 2) throw std::invalid_argument("k must be >= 2");
  if (params.r < 1) throw std::invalid_argument("r must be >= 1");
  if (params.n < 1) throw std::invalid_argument("n must be >= 1");
  if ((static_cast<std::int64_t>(params.r) * params.n) % params.k != 0) {
    throw std::invalid_argument("r*n = " +
                                std::to_string(std::int64_t{params.r} *
                                               params.n) +
                                " is not divisible by k = " +
                                std::to_string(params.k));
  }
}

std::uint64_t Binomial64(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 acc = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // acc * (n - k + i) / i stays integral at every step.
    acc = acc * (n - k + i) / i;
    if (acc > std::numeric_limits<std::uint64_t>::max()) {
      throw std::overflow_error("binomial coefficient exceeds 64 bits");
    }
  }
  return static_cast<std::uint64_t>(acc);
}

std::uint64_t ColexRank(std::span<const Vertex> subset) {
  std::uint64_t rank = 0;
  for (std::size_t i = 0; i < subset.size(); ++i) {
    rank += Binomial64(subset[i], i + 1);
  }
  return rank;
}

void ColexUnrank(std::uint64_t rank, int k, std::span<Vertex> out) {
  for (int i = k; i >= 1; --i) {
    // Largest c with C(c, i) <= rank; c >= i - 1 since C(i-1, i) = 0.
    std::uint64_t lo = i - 1;
    std::uint64_t hi = i - 1;
    while (Binomial64(hi + 1, i) <= rank) hi = hi * 2 + 1;
    while (lo < hi) {
      const std::uint64_t mid = lo + (hi - lo + 1) / 2;
      if (Binomial64(mid, i) <= rank) {
        lo = mid;
      } else {
        hi = mid - 1;
      }
    }
    out[i - 1] = static_cast<Vertex>(lo);
    rank -= Binomial64(lo, i);
  }
}

Hypergraph GenBinomial(const BinomialParams& params) {
  Validate(params);
  const std::uint64_t total = Binomial64(params.n, params.k);
  std::vector<Vertex> flat;
  std::vector<Vertex> subset(params.k);
  if (params.p >= 1.0) {
    for (std::uint64_t rank = 0; rank < total; ++rank) {
      ColexUnrank(rank, params.k, subset);
      flat.insert(flat.end(), subset.begin(), subset.end());
    }
  } else if (params.p > 0.0) {
    SplitMix64 rng(params.seed);
    const double log_q = std::log1p(-params.p);
    std::uint64_t rank = 0;
    while (true) {
      // Number of skipped k-sets before the next edge: Geometric(p).
      const double u = rng.Uniform01();
      const double skip = std::floor(std::log1p(-u) / log_q);
      if (skip >= static_cast<double>(total - rank)) break;
      rank += static_cast<std::uint64_t>(skip);
      ColexUnrank(rank, params.k, subset);
      flat.insert(flat.end(), subset.begin(), subset.end());
      if (++rank >= total) break;
    }
  }
  return MakeHypergraphFlat(params.k, params.n, std::move(flat));
}

MultiHypergraph Project(const Configuration& config) {
  std::vector<std::vector<Vertex>> tuples;
  tuples.reserve(config.blocks.size());
  for (const auto& block : config.blocks) {
    std::vector<Vertex> t;
    t.reserve(block.size());
    for (std::uint32_t w : block) t.push_back(config.owner(w));
    tuples.push_back(std::move(t));
  }
  return MakeMultiHypergraph(config.k, config.n, tuples);
}

namespace {

Configuration DrawConfiguration(const RegularParams& params,
                                SplitMix64& rng) {
  const std::uint32_t points =
      static_cast<std::uint32_t>(params.r) * params.n;
  std::vector<std::uint32_t> w(points);
  std::iota(w.begin(), w.end(), 0u);
  Shuffle(rng, std::span<std::uint32_t>(w));
  Configuration config{params.n, params.r, params.k, {}};
  config.blocks.reserve(points / params.k);
  for (std::uint32_t i = 0; i < points; i += params.k) {
    std::vector<std::uint32_t> block(w.begin() + i, w.begin() + i + params.k);
    std::sort(block.begin(), block.end());
    config.blocks.push_back(std::move(block));
  }
  return config;
}

}  // namespace

ConfigurationDraw GenConfiguration(const RegularParams& params) {
  Validate(params);
  SplitMix64 rng(params.seed);
  Configuration config = DrawConfiguration(params, rng);
  MultiHypergraph projected = Project(config);
  return {std::move(config), std::move(projected)};
}

RegularDraw GenRegularSimple(const RegularParams& params, int max_tries) {
  Validate(params);
  if (params.k > params.n) {
    throw RejectionExhausted("no simple instance exists with k > n");
  }
  SplitMix64 rng(params.seed);
  for (int tries = 1; tries <= max_tries; ++tries) {
    const MultiHypergraph projected = Project(DrawConfiguration(params, rng));
    if (auto simple = ToSimple(projected)) {
      return {std::move(*simple), tries};
    }
  }
  throw RejectionExhausted(
      "no simple configuration after " + std::to_string(max_tries) +
      " tries (n=" + std::to_string(params.n) + ", r=" +
      std::to_string(params.r) + ", k=" + std::to_string(params.k) + ")");
}

ThresholdReport ValidateThreshold(int n, int k, double p) {
  ThresholdReport report;
  report.scale = std::pow(static_cast<double>(n), -(k - 2)) *
                 std::log(static_cast<double>(n));
  report.p_ratio = p / report.scale;
  report.q_ratio = (1.0 - p) / report.scale;
  const double worst = std::min(report.p_ratio, report.q_ratio);
  constexpr double kTol = 1e-9;
  if (std::abs(worst - 1.0) <= kTol) {
    report.status = RegimeStatus::kBoundary;
  } else if (worst < 1.0) {
    report.status = RegimeStatus::kOutside;
  } else {
    report.status = RegimeStatus::kInRegime;
  }
  return report;
}

const char* ToString(RegimeStatus status) {
  switch (status) {
    case RegimeStatus::kInRegime:
      return "in-regime";
    case RegimeStatus::kBoundary:
      return "boundary";
    case RegimeStatus::kOutside:
      return "outside";
  }
  return "unknown";
}

}  // namespace hyperiso
