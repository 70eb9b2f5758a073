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

// Seeded generators for the binomial model H(n,p;k) and the configuration
// model for r-regular k-uniform hypergraphs.

#ifndef HYPERISO_MODELS_H_
#define HYPERISO_MODELS_H_

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "hyperiso/hypergraph.h"

namespace hyperiso {

struct BinomialParams {
  int n = 0;
  int k = 3;
  double p = 0.0;
  std::uint64_t seed = 0;
};

struct RegularParams {
  int n = 0;
  int k = 3;
  int r = 3;
  std::uint64_t seed = 0;
};

void Validate(const BinomialParams& params);
// Requires r >= 1, k >= 2, n >= 1 and r*n divisible by k.
void Validate(const RegularParams& params);

// C(n, k) as uint64; throws std::overflow_error when it does not fit.
std::uint64_t Binomial64(std::uint64_t n, std::uint64_t k);

// Co-lexicographic rank of a strictly increasing k-subset of {0, 1, ...}:
// sum over i of C(s_i, i + 1).
std::uint64_t ColexRank(std::span<const Vertex> subset);
// Inverse of ColexRank; writes k ascending ids to `out`.
void ColexUnrank(std::uint64_t rank, int k, std::span<Vertex> out);

// Each of the C(n,k) k-sets is an edge independently with probability p.
// Uses geometric skipping over the co-lexicographic enumeration, so the
// expected cost is proportional to the number of edges.
Hypergraph GenBinomial(const BinomialParams& params);

// W = {0, ..., rn-1}; point w belongs to vertex w / r. Blocks are
// consecutive k-chunks of a seeded Fisher-Yates shuffle of W, each stored
// ascending.
struct Configuration {
  int n = 0;
  int r = 0;
  int k = 0;
  std::vector<std::vector<std::uint32_t>> blocks;

  std::size_t num_blocks() const { return blocks.size(); }
  Vertex owner(std::uint32_t point) const { return point / r; }
};

struct ConfigurationDraw {
  Configuration config;
  MultiHypergraph projected;
};

// Projection of the configuration onto vertices: block {w1..wk} becomes the
// tuple {f(w1)..f(wk)}.
MultiHypergraph Project(const Configuration& config);

ConfigurationDraw GenConfiguration(const RegularParams& params);

class RejectionExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RegularDraw {
  Hypergraph hypergraph;
  int tries = 0;
};

// Redraws configurations (seed stream continues across tries) until the
// projection is simple. Throws RejectionExhausted after max_tries.
RegularDraw GenRegularSimple(const RegularParams& params, int max_tries);

enum class RegimeStatus { kInRegime, kBoundary, kOutside };

struct ThresholdReport {
  double scale = 0.0;  // n^{-(k-2)} ln n
  double p_ratio = 0.0;
  double q_ratio = 0.0;  // (1 - p) / scale
  RegimeStatus status = RegimeStatus::kInRegime;
};

// Reports how far p and 1-p sit above n^{-(k-2)} ln n. Ratios within 1e-9 of
// 1 are kBoundary; any ratio below that is kOutside. Informational only.
ThresholdReport ValidateThreshold(int n, int k, double p);

const char* ToString(RegimeStatus status);

}  // namespace hyperiso

#endif  // HYPERISO_MODELS_H_
