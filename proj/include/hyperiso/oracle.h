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

// Ground truth for small instances: exhaustive isomorphism and automorphism
// search, the pairwise link-isomorphism scan, and the exact and sampled
// block-occupancy distributions.

#ifndef HYPERISO_ORACLE_H_
#define HYPERISO_ORACLE_H_

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hyperiso/hypergraph.h"

namespace hyperiso {

// Raised when an exhaustive search is asked to run above its size guard.
class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kDefaultOracleMaxN = 32;

// Backtracking over vertex maps. Candidates must agree on degree and on the
// full BFS distance profile; variables are ordered rarest invariant class
// first, then by the number of already-placed neighbors. Exhaustive: returns
// a bijection a -> b whenever one exists. Throws GuardError if n > max_n.
std::optional<std::vector<Vertex>> BruteIso(const Hypergraph& a,
                                            const Hypergraph& b,
                                            int max_n = kDefaultOracleMaxN);

// True iff the identity is the only automorphism.
bool AutomorphismTrivial(const Hypergraph& h, int max_n = kDefaultOracleMaxN);

// All pairs i < j whose links are isomorphic. Decided by link certificates
// when both links label successfully, otherwise by BruteIso on the links.
// Empty iff no two links are isomorphic.
std::vector<std::pair<Vertex, Vertex>> LinkCollisionPairs(
    const Hypergraph& h, int max_n = kDefaultOracleMaxN);

// Exact mass P_j = P(X_S = j and every block holds <= 2 points of S) for a
// uniform s-subset S of mu blocks of size r:
//   P_j = C(mu, j) C(j, s-j) r^(2j-s) C(r,2)^(s-j) / C(r mu, s).
struct OccupancyDist {
  int mu = 0;
  int r = 0;
  int s = 0;
  int j_min = 0;  // ceil(s/2)
  int j_max = 0;  // min(s, mu)
  // probs[j - j_min], reduced fractions.
  std::vector<mpq_class> probs;

  mpq_class P(int j) const;
  mpq_class Total() const;
};

// Requires mu >= 1, r >= 1, 1 <= s <= r*mu.
OccupancyDist OccupancyExact(int mu, int r, int s);

// Closed-form P_{j+1} / P_j for s/2 <= j < s (r >= 2).
mpq_class OccupancyRatio(int mu, int r, int s, int j);

struct OccupancySample {
  int mu = 0;
  int r = 0;
  int s = 0;
  std::uint64_t trials = 0;
  // counts[j] = draws with X_S = j, j in 0..min(s, mu).
  std::vector<std::uint64_t> counts;
  // Same, restricted to draws whose largest block intersection is <= 2.
  std::vector<std::uint64_t> counts_max2;
  // Draws with some block holding >= 3 points of S.
  std::uint64_t max3_or_more = 0;

  std::uint64_t trials_max2() const { return trials - max3_or_more; }
};

// Draw d uses the stream SplitMix64(DeriveSeed(seed, d)).
OccupancySample OccupancyMonteCarlo(int mu, int r, int s,
                                    std::uint64_t trials, std::uint64_t seed);

// Block count X_S and the largest block intersection for one draw.
std::pair<int, int> DrawOccupancy(int mu, int r, int s, std::uint64_t seed);

// Total variation distance between the exact conditional distribution
// P_j / sum P and the sampled distribution given max intersection <= 2.
double ConditionalTotalVariation(const OccupancyDist& exact,
                                 const OccupancySample& sample);

}  // namespace hyperiso

#endif  // HYPERISO_ORACLE_H_
