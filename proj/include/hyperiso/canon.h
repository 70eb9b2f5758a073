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

// Canonical labeling of uniform hypergraphs in the binomial regime.
//
// Graphs (k = 2) are labeled by iterated color refinement. For k >= 3 every
// vertex is labeled by the canonical certificate of its link, computed
// recursively down to graphs. Nothing is ever tie-broken: if two vertices
// end up with the same invariant the outcome is Ambiguous, so a Success is
// always a canonical labeling.

#ifndef HYPERISO_CANON_H_
#define HYPERISO_CANON_H_

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "hyperiso/hypergraph.h"

namespace hyperiso {

enum class LabelingStatus { kSuccess, kAmbiguous };

enum class AmbiguityReason {
  kNone,
  kTiedColors,
  kTiedLinkCertificates,
  kRecursiveFailure,
  kTiedProfiles,
};

const char* ToString(LabelingStatus status);
const char* ToString(AmbiguityReason reason);

struct LabelingOutcome {
  LabelingStatus status = LabelingStatus::kAmbiguous;
  // labeling[v] is the canonical rank of v; empty unless Success.
  std::vector<Vertex> labeling;
  AmbiguityReason reason = AmbiguityReason::kNone;
  // Number of vertex-invariant classes with more than one member.
  std::size_t tied_classes = 0;

  bool success() const { return status == LabelingStatus::kSuccess; }
};

struct Certificate {
  std::vector<std::uint8_t> bytes;

  std::string Hex() const;
  friend auto operator<=>(const Certificate&, const Certificate&) = default;
};

// Stable coloring from iterated refinement. Colors are ranks of sorted color
// descriptions, so they are isomorphism-invariant and comparable between
// isomorphic inputs.
struct StableColoring {
  std::vector<std::uint32_t> colors;
  std::size_t num_classes = 0;
  int rounds = 0;

  // counts[c] = number of vertices with color c.
  std::vector<std::uint32_t> Histogram() const;
};

// Initial color is the degree. Each round the new color of v is the rank of
// (old color of v, sorted multiset over edges e containing v of the sorted
// colors of e \ {v}); for k = 2 this is the usual neighbor-multiset
// refinement. Stops when the class count stops growing or reaches n.
StableColoring RefineColors(const Hypergraph& h);

// k = 2 only. Success iff refinement separates all n vertices.
LabelingOutcome RefineGraphLabels(const Hypergraph& g);

// Per-vertex invariant used by CanonicalLabeling for k >= 3: a status byte,
// then either the link certificate or the link's stable color histogram.
// For k = 2 this is the stable refinement color.
std::vector<std::vector<std::uint8_t>> VertexInvariants(const Hypergraph& h);

LabelingOutcome CanonicalLabeling(const Hypergraph& h);

// Varint encoding of (k, n, m, relabeled edges sorted lexicographically).
// Throws std::invalid_argument unless outcome is a Success for h.
Certificate MakeCertificate(const Hypergraph& h,
                            const LabelingOutcome& outcome);
// Same layout with each tuple followed by its multiplicity.
Certificate MakeCertificate(const MultiHypergraph& h,
                            const LabelingOutcome& outcome);

enum class IsoVerdict { kIsomorphic, kNonIsomorphic, kInconclusive };
const char* ToString(IsoVerdict verdict);

struct IsoResult {
  IsoVerdict verdict = IsoVerdict::kInconclusive;
  // Which check decided: k, n, edge-count, degree-sequence, certificate,
  // one-sided-labeling or both-ambiguous.
  std::string decided_by;
};

// Never guesses: two Ambiguous outcomes give Inconclusive.
IsoResult IsoTest(const Hypergraph& a, const Hypergraph& b);

}  // namespace hyperiso

#endif  // HYPERISO_CANON_H_
