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

// Distance-profile labeling for r-regular k-uniform instances: each vertex is
// described by its BFS layer sizes d_1..d_L with L = ceil(0.6 ln n / ln rho)
// and rho = (r-1)(k-1), the branching factor of the exploration.

#ifndef HYPERISO_REGCANON_H_
#define HYPERISO_REGCANON_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "hyperiso/canon.h"
#include "hyperiso/hypergraph.h"

namespace hyperiso {

// (r-1)(k-1). Requires r >= 1, k >= 2.
int Rho(int r, int k);

// ceil(0.6 ln n / ln rho). Throws std::invalid_argument for rho < 2 or n < 2.
int LStar(int n, int rho);

// ceil(100 ln(ln n) / ln rho); reported for diagnostics only, never used to
// truncate a search. Requires n >= 3 and rho >= 2.
int LZero(int n, int rho);

struct RegularShape {
  int n = 0;
  int r = 0;
  int k = 0;
  int rho = 0;
  int lstar = 0;
  int lzero = 0;
};

// Fills rho, lstar and lzero. Throws std::invalid_argument when rho < 2.
RegularShape MakeRegularShape(int n, int r, int k);

struct DistanceProfile {
  Vertex vertex = 0;
  // sizes[l - 1] = d_l, zero-padded to the requested depth.
  std::vector<std::uint32_t> sizes;

  friend bool operator==(const DistanceProfile&,
                         const DistanceProfile&) = default;
};

std::vector<DistanceProfile> DistanceProfiles(const Adjacency& adj, int lmax);
std::vector<DistanceProfile> DistanceProfiles(const MultiHypergraph& h,
                                              int lmax);
std::vector<DistanceProfile> DistanceProfiles(const Hypergraph& h, int lmax);

// Requires every multiplicity-counted degree to equal shape.r (throws
// std::invalid_argument otherwise). Success iff the n profiles of depth
// shape.lstar are pairwise distinct; the label of v is the rank of its
// profile in lexicographic order.
LabelingOutcome RegularCanonicalLabeling(const MultiHypergraph& h,
                                         const RegularShape& shape);
LabelingOutcome RegularCanonicalLabeling(const Hypergraph& h,
                                         const RegularShape& shape);

// BFS edge exposure from v. Vertices are processed layer by layer in
// ascending id; each vertex exposes its not-yet-exposed incident edges
// (tuple copies, counting multiplicity) in ascending tuple order. An exposed
// edge is dispensable when at least two of its k points belong to vertices
// already discovered. Returns the count among the first `budget` exposures.
std::size_t CountDispensable(const MultiHypergraph& h, Vertex v,
                             std::size_t budget);
std::size_t CountDispensable(const Hypergraph& h, Vertex v,
                             std::size_t budget);

}  // namespace hyperiso

#endif  // HYPERISO_REGCANON_H_
