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

#include "hyperiso/regcanon.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace hyperiso {

int Rho(int r, int k) {
  if (r < 1 || k < 2) throw std::invalid_argument("need r >= 1 and k >= 2");
  return (r - 1) * (k - 1);
}

int LStar(int n, int rho) {
  if (rho < 2) {
    throw std::invalid_argument("rho = " + std::to_string(rho) +
                                " < 2: profile depth undefined");
  }
  if (n < 2) throw std::invalid_argument("n must be >= 2");
  const double value = 0.6 * std::log(static_cast<double>(n)) /
                       std::log(static_cast<double>(rho));
  // Guard exact integers such as 0.6 * log2(1024) = 6 against rounding up.
  const double rounded = std::round(value);
  if (std::abs(value - rounded) < 1e-9) return static_cast<int>(rounded);
  return static_cast<int>(std::ceil(value));
}

int LZero(int n, int rho) {
  if (rho < 2) throw std::invalid_argument("rho must be >= 2");
  if (n < 3) throw std::invalid_argument("n must be >= 3");
  const double value = 100.0 * std::log(std::log(static_cast<double>(n))) /
                       std::log(static_cast<double>(rho));
  return static_cast<int>(std::ceil(value));
}

RegularShape MakeRegularShape(int n, int r, int k) {
  RegularShape shape{n, r, k, Rho(r, k), 0, 0};
  shape.lstar = LStar(n, shape.rho);
  shape.lzero = n >= 3 ? LZero(n, shape.rho) : 0;
  return shape;
}

std::vector<DistanceProfile> DistanceProfiles(const Adjacency& adj,
                                              int lmax) {
  if (lmax < 1) throw std::invalid_argument("lmax must be >= 1");
  const std::size_t n = adj.num_vertices();
  std::vector<DistanceProfile> out(n);
  // BFS with a reusable visit stamp instead of per-root clearing.
  std::vector<std::uint32_t> stamp(n, 0);
  std::vector<Vertex> frontier;
  std::vector<Vertex> next;
  for (std::size_t v = 0; v < n; ++v) {
    const std::uint32_t mark = static_cast<std::uint32_t>(v) + 1;
    auto& profile = out[v];
    profile.vertex = static_cast<Vertex>(v);
    profile.sizes.assign(lmax, 0);
    frontier.assign(1, static_cast<Vertex>(v));
    stamp[v] = mark;
    for (int level = 0; level < lmax && !frontier.empty(); ++level) {
      next.clear();
      for (Vertex u : frontier) {
        for (Vertex w : adj.of(u)) {
          if (stamp[w] != mark) {
            stamp[w] = mark;
            next.push_back(w);
          }
        }
      }
      profile.sizes[level] = static_cast<std::uint32_t>(next.size());
      frontier.swap(next);
    }
  }
  return out;
}

std::vector<DistanceProfile> DistanceProfiles(const MultiHypergraph& h,
                                              int lmax) {
  return DistanceProfiles(BuildAdjacency(h), lmax);
}

std::vector<DistanceProfile> DistanceProfiles(const Hypergraph& h, int lmax) {
  return DistanceProfiles(BuildAdjacency(h), lmax);
}

LabelingOutcome RegularCanonicalLabeling(const MultiHypergraph& h,
                                         const RegularShape& shape) {
  if (h.n() != shape.n || h.k() != shape.k) {
    throw std::invalid_argument("instance shape does not match parameters");
  }
  const auto degrees = h.degrees();
  for (std::size_t v = 0; v < degrees.size(); ++v) {
    if (degrees[v] != static_cast<std::size_t>(shape.r)) {
      throw std::invalid_argument(
          "not " + std::to_string(shape.r) + "-regular: vertex " +
          std::to_string(v) + " has degree " + std::to_string(degrees[v]));
    }
  }
  const auto profiles = DistanceProfiles(h, shape.lstar);
  std::vector<std::uint32_t> order(profiles.size());
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    return profiles[a].sizes < profiles[b].sizes;
  });

  LabelingOutcome outcome;
  std::vector<Vertex> labeling(profiles.size());
  std::size_t tied = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    labeling[order[i]] = static_cast<Vertex>(i);
    const bool same_as_prev =
        i > 0 && profiles[order[i - 1]].sizes == profiles[order[i]].sizes;
    const bool starts_tie = !same_as_prev && i + 1 < order.size() &&
                            profiles[order[i + 1]].sizes ==
                                profiles[order[i]].sizes;
    if (starts_tie) ++tied;
  }
  if (tied > 0) {
    outcome.reason = AmbiguityReason::kTiedProfiles;
    outcome.tied_classes = tied;
    return outcome;
  }
  outcome.status = LabelingStatus::kSuccess;
  outcome.labeling = std::move(labeling);
  return outcome;
}

LabelingOutcome RegularCanonicalLabeling(const Hypergraph& h,
                                         const RegularShape& shape) {
  return RegularCanonicalLabeling(ToMulti(h), shape);
}

std::size_t CountDispensable(const MultiHypergraph& h, Vertex v,
                             std::size_t budget) {
  if (budget < 1) throw std::invalid_argument("budget must be >= 1");
  if (v >= static_cast<Vertex>(h.n())) {
    throw std::invalid_argument("root out of range");
  }
  // Tuple indices incident to each vertex, ascending, each listed once.
  std::vector<std::vector<std::uint32_t>> incident(h.n());
  for (std::size_t t = 0; t < h.num_tuples(); ++t) {
    const auto tuple = h.tuple(t);
    for (std::size_t i = 0; i < tuple.size(); ++i) {
      if (i == 0 || tuple[i] != tuple[i - 1]) {
        incident[tuple[i]].push_back(static_cast<std::uint32_t>(t));
      }
    }
  }
  std::vector<bool> exposed(h.num_tuples(), false);
  std::vector<bool> seen(h.n(), false);
  std::size_t exposures = 0;
  std::size_t dispensable = 0;

  std::vector<Vertex> layer{v};
  seen[v] = true;
  while (!layer.empty() && exposures < budget) {
    std::vector<Vertex> next;
    for (Vertex u : layer) {
      for (std::uint32_t t : incident[u]) {
        if (exposed[t]) continue;
        exposed[t] = true;
        const auto tuple = h.tuple(t);
        for (std::uint32_t copy = 0; copy < h.multiplicity(t); ++copy) {
          if (exposures == budget) return dispensable;
          ++exposures;
          std::size_t known_points = 0;
          for (Vertex x : tuple) known_points += seen[x] ? 1 : 0;
          if (known_points >= 2) ++dispensable;
          for (Vertex x : tuple) {
            if (!seen[x]) {
              seen[x] = true;
              next.push_back(x);
            }
          }
        }
      }
    }
    std::sort(next.begin(), next.end());
    layer = std::move(next);
  }
  return dispensable;
}

std::size_t CountDispensable(const Hypergraph& h, Vertex v,
                             std::size_t budget) {
  return CountDispensable(ToMulti(h), v, budget);
}

}  // namespace hyperiso
