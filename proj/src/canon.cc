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

#include "hyperiso/canon.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "varint.h"

namespace hyperiso {

using internal::AppendVarint;

const char* ToString(LabelingStatus status) {
  return status == LabelingStatus::kSuccess ? "success" : "ambiguous";
}

const char* ToString(AmbiguityReason reason) {
  switch (reason) {
    case AmbiguityReason::kNone:
      return "none";
    case AmbiguityReason::kTiedColors:
      return "tied-colors";
    case AmbiguityReason::kTiedLinkCertificates:
      return "tied-link-certificates";
    case AmbiguityReason::kRecursiveFailure:
      return "recursive-failure";
    case AmbiguityReason::kTiedProfiles:
      return "tied-profiles";
  }
  return "unknown";
}

const char* ToString(IsoVerdict verdict) {
  switch (verdict) {
    case IsoVerdict::kIsomorphic:
      return "isomorphic";
    case IsoVerdict::kNonIsomorphic:
      return "non-isomorphic";
    case IsoVerdict::kInconclusive:
      return "inconclusive";
  }
  return "unknown";
}

std::string Certificate::Hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (std::uint8_t b : bytes) {
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 0xf]);
  }
  return out;
}

std::vector<std::uint32_t> StableColoring::Histogram() const {
  std::vector<std::uint32_t> counts(num_classes, 0);
  for (std::uint32_t c : colors) ++counts[c];
  return counts;
}

namespace {

// Replaces each key by its rank among the distinct keys. Returns the number
// of distinct keys.
template <typename Key>
std::size_t RankKeys(const std::vector<Key>& keys,
                     std::vector<std::uint32_t>* ranks) {
  const std::size_t n = keys.size();
  std::vector<std::uint32_t> order(n);
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(),
            [&](std::uint32_t a, std::uint32_t b) { return keys[a] < keys[b]; });
  ranks->assign(n, 0);
  std::uint32_t rank = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0 && keys[order[i - 1]] < keys[order[i]]) ++rank;
    (*ranks)[order[i]] = rank;
  }
  return n == 0 ? 0 : rank + 1;
}

// Sizes of classes with more than one member, counted.
template <typename Key>
std::size_t CountTiedClasses(const std::vector<Key>& keys) {
  std::vector<std::uint32_t> ranks;
  const std::size_t classes = RankKeys(keys, &ranks);
  std::vector<std::uint32_t> sizes(classes, 0);
  for (std::uint32_t r : ranks) ++sizes[r];
  return std::count_if(sizes.begin(), sizes.end(),
                       [](std::uint32_t s) { return s > 1; });
}

std::vector<Vertex> RelabeledSortedFlat(int k,
                                        const std::vector<Vertex>& flat,
                                        const std::vector<Vertex>& labeling,
                                        std::vector<std::size_t>* order_out) {
  const std::size_t m = flat.size() / k;
  std::vector<Vertex> relabeled(flat.size());
  for (std::size_t i = 0; i < flat.size(); ++i) {
    relabeled[i] = labeling[flat[i]];
  }
  for (std::size_t e = 0; e < m; ++e) {
    std::sort(relabeled.begin() + e * k, relabeled.begin() + (e + 1) * k);
  }
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::lexicographical_compare(
        relabeled.begin() + a * k, relabeled.begin() + (a + 1) * k,
        relabeled.begin() + b * k, relabeled.begin() + (b + 1) * k);
  });
  std::vector<Vertex> out;
  out.reserve(relabeled.size());
  for (std::size_t e : order) {
    out.insert(out.end(), relabeled.begin() + e * k,
               relabeled.begin() + (e + 1) * k);
  }
  *order_out = std::move(order);
  return out;
}

void CheckUsableOutcome(int n, const LabelingOutcome& outcome) {
  if (!outcome.success()) {
    throw std::invalid_argument("certificate requires a successful labeling");
  }
  if (outcome.labeling.size() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument("labeling size does not match vertex count");
  }
}

}  // namespace

StableColoring RefineColors(const Hypergraph& h) {
  const int n = h.n();
  const int k = h.k();
  StableColoring out;
  {
    std::vector<std::size_t> deg = h.degrees();
    out.num_classes = RankKeys(deg, &out.colors);
  }
  std::vector<std::vector<std::uint32_t>> desc(n);
  std::vector<std::uint32_t> edge_colors;
  while (out.num_classes < static_cast<std::size_t>(n)) {
    for (int v = 0; v < n; ++v) {
      auto& d = desc[v];
      d.clear();
      d.push_back(out.colors[v]);
      const auto incident = h.incident(v);
      edge_colors.clear();
      for (std::uint32_t e : incident) {
        const auto start = edge_colors.size();
        for (Vertex u : h.edge(e)) {
          if (u != static_cast<Vertex>(v)) edge_colors.push_back(out.colors[u]);
        }
        std::sort(edge_colors.begin() + start, edge_colors.end());
      }
      if (k == 2) {
        std::sort(edge_colors.begin(), edge_colors.end());
      } else {
        // Sort the fixed-width (k-1) records.
        const std::size_t w = k - 1;
        std::vector<std::uint32_t> idx(incident.size());
        std::iota(idx.begin(), idx.end(), 0u);
        std::sort(idx.begin(), idx.end(), [&](std::uint32_t a, std::uint32_t b) {
          return std::lexicographical_compare(
              edge_colors.begin() + a * w, edge_colors.begin() + (a + 1) * w,
              edge_colors.begin() + b * w, edge_colors.begin() + (b + 1) * w);
        });
        for (std::uint32_t i : idx) {
          d.insert(d.end(), edge_colors.begin() + i * w,
                   edge_colors.begin() + (i + 1) * w);
        }
        continue;
      }
      d.insert(d.end(), edge_colors.begin(), edge_colors.end());
    }
    std::vector<std::uint32_t> next;
    const std::size_t classes = RankKeys(desc, &next);
    ++out.rounds;
    // Refinement never merges classes, so equal counts mean stability.
    const bool stable = classes == out.num_classes;
    out.colors = std::move(next);
    out.num_classes = classes;
    if (stable) break;
  }
  return out;
}

LabelingOutcome RefineGraphLabels(const Hypergraph& g) {
  if (g.k() != 2) {
    throw std::invalid_argument("color refinement labeling requires k = 2");
  }
  StableColoring coloring = RefineColors(g);
  LabelingOutcome outcome;
  if (coloring.num_classes == static_cast<std::size_t>(g.n())) {
    outcome.status = LabelingStatus::kSuccess;
    outcome.labeling = std::move(coloring.colors);
  } else {
    outcome.status = LabelingStatus::kAmbiguous;
    outcome.reason = AmbiguityReason::kTiedColors;
    outcome.tied_classes = CountTiedClasses(coloring.colors);
  }
  return outcome;
}

namespace {

struct LinkSummary {
  bool success = false;
  std::vector<std::uint8_t> invariant;
};

std::vector<LinkSummary> SummarizeLinks(const Hypergraph& h) {
  std::vector<LinkSummary> out(h.n());
  for (int v = 0; v < h.n(); ++v) {
    const Hypergraph link = Link(h, v);
    const LabelingOutcome inner = CanonicalLabeling(link);
    auto& inv = out[v].invariant;
    if (inner.success()) {
      out[v].success = true;
      inv.push_back(1);
      const Certificate cert = MakeCertificate(link, inner);
      inv.insert(inv.end(), cert.bytes.begin(), cert.bytes.end());
    } else {
      inv.push_back(0);
      const auto hist = RefineColors(link).Histogram();
      AppendVarint(inv, hist.size());
      for (std::uint32_t c : hist) AppendVarint(inv, c);
    }
  }
  return out;
}

}  // namespace

std::vector<std::vector<std::uint8_t>> VertexInvariants(const Hypergraph& h) {
  std::vector<std::vector<std::uint8_t>> out;
  if (h.k() == 2) {
    const StableColoring coloring = RefineColors(h);
    for (std::uint32_t c : coloring.colors) {
      std::vector<std::uint8_t> inv;
      AppendVarint(inv, c);
      out.push_back(std::move(inv));
    }
    return out;
  }
  for (auto& summary : SummarizeLinks(h)) {
    out.push_back(std::move(summary.invariant));
  }
  return out;
}

LabelingOutcome CanonicalLabeling(const Hypergraph& h) {
  if (h.k() < 2) throw std::invalid_argument("k must be >= 2");
  if (h.k() == 2) return RefineGraphLabels(h);

  const std::vector<LinkSummary> links = SummarizeLinks(h);
  std::vector<std::vector<std::uint8_t>> invariants;
  invariants.reserve(links.size());
  bool all_success = true;
  for (const auto& link : links) {
    all_success = all_success && link.success;
    invariants.push_back(link.invariant);
  }

  LabelingOutcome outcome;
  std::vector<std::uint32_t> ranks;
  const std::size_t classes = RankKeys(invariants, &ranks);
  if (!all_success) {
    outcome.reason = AmbiguityReason::kRecursiveFailure;
    outcome.tied_classes = CountTiedClasses(invariants);
    return outcome;
  }
  if (classes != static_cast<std::size_t>(h.n())) {
    outcome.reason = AmbiguityReason::kTiedLinkCertificates;
    outcome.tied_classes = CountTiedClasses(invariants);
    return outcome;
  }
  outcome.status = LabelingStatus::kSuccess;
  outcome.labeling = std::move(ranks);
  return outcome;
}

Certificate MakeCertificate(const Hypergraph& h,
                            const LabelingOutcome& outcome) {
  CheckUsableOutcome(h.n(), outcome);
  std::vector<std::size_t> order;
  const std::vector<Vertex> flat =
      RelabeledSortedFlat(h.k(), h.flat_edges(), outcome.labeling, &order);
  Certificate cert;
  AppendVarint(cert.bytes, h.k());
  AppendVarint(cert.bytes, h.n());
  AppendVarint(cert.bytes, h.num_edges());
  for (Vertex v : flat) AppendVarint(cert.bytes, v);
  return cert;
}

Certificate MakeCertificate(const MultiHypergraph& h,
                            const LabelingOutcome& outcome) {
  CheckUsableOutcome(h.n(), outcome);
  std::vector<std::size_t> order;
  const std::vector<Vertex> flat =
      RelabeledSortedFlat(h.k(), h.flat_tuples(), outcome.labeling, &order);
  Certificate cert;
  AppendVarint(cert.bytes, h.k());
  AppendVarint(cert.bytes, h.n());
  AppendVarint(cert.bytes, h.num_tuples());
  const std::size_t k = h.k();
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t j = 0; j < k; ++j) AppendVarint(cert.bytes, flat[i * k + j]);
    AppendVarint(cert.bytes, h.multiplicity(order[i]));
  }
  return cert;
}

IsoResult IsoTest(const Hypergraph& a, const Hypergraph& b) {
  if (a.k() != b.k()) return {IsoVerdict::kNonIsomorphic, "k"};
  if (a.n() != b.n()) return {IsoVerdict::kNonIsomorphic, "n"};
  if (a.num_edges() != b.num_edges()) {
    return {IsoVerdict::kNonIsomorphic, "edge-count"};
  }
  auto da = a.degrees();
  auto db = b.degrees();
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return {IsoVerdict::kNonIsomorphic, "degree-sequence"};

  const LabelingOutcome la = CanonicalLabeling(a);
  const LabelingOutcome lb = CanonicalLabeling(b);
  if (la.success() && lb.success()) {
    const bool same = MakeCertificate(a, la) == MakeCertificate(b, lb);
    return {same ? IsoVerdict::kIsomorphic : IsoVerdict::kNonIsomorphic,
            "certificate"};
  }
  if (la.success() != lb.success()) {
    return {IsoVerdict::kNonIsomorphic, "one-sided-labeling"};
  }
  return {IsoVerdict::kInconclusive, "both-ambiguous"};
}

}  // namespace hyperiso
