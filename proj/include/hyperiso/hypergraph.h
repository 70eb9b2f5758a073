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

#ifndef HYPERISO_HYPERGRAPH_H_
#define HYPERISO_HYPERGRAPH_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace hyperiso {

using Vertex = std::uint32_t;

// A simple k-uniform hypergraph on vertices 0..n-1. Edges are stored flat,
// k ids per edge, each edge strictly increasing and the edge list sorted
// lexicographically without duplicates. Immutable once built.
class Hypergraph {
 public:
  Hypergraph() = default;

  int k() const { return k_; }
  int n() const { return n_; }
  std::size_t num_edges() const { return k_ == 0 ? 0 : flat_.size() / k_; }

  std::span<const Vertex> edge(std::size_t i) const {
    return {flat_.data() + i * k_, static_cast<std::size_t>(k_)};
  }
  const std::vector<Vertex>& flat_edges() const { return flat_; }

  // Indices of the edges containing v, ascending.
  std::span<const std::uint32_t> incident(Vertex v) const {
    return {incidence_.data() + incidence_offsets_[v],
            incidence_offsets_[v + 1] - incidence_offsets_[v]};
  }
  std::size_t degree(Vertex v) const { return incident(v).size(); }
  std::vector<std::size_t> degrees() const;

  // `e` must be strictly increasing.
  bool has_edge(std::span<const Vertex> e) const;

  friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
    return a.k_ == b.k_ && a.n_ == b.n_ && a.flat_ == b.flat_;
  }

 private:
  friend Hypergraph MakeHypergraphFromSortedFlat(int, int,
                                                 std::vector<Vertex>);
  Hypergraph(int k, int n, std::vector<Vertex> flat);

  int k_ = 0;
  int n_ = 0;
  std::vector<Vertex> flat_;
  std::vector<std::uint32_t> incidence_offsets_;
  std::vector<std::uint32_t> incidence_;
};

// Multihypergraph produced by projecting a configuration: tuples are
// non-decreasing (repeats allowed), stored sorted and distinct, each with a
// positive multiplicity.
class MultiHypergraph {
 public:
  MultiHypergraph() = default;

  int k() const { return k_; }
  int n() const { return n_; }
  std::size_t num_tuples() const { return mult_.size(); }
  std::span<const Vertex> tuple(std::size_t i) const {
    return {flat_.data() + i * k_, static_cast<std::size_t>(k_)};
  }
  std::uint32_t multiplicity(std::size_t i) const { return mult_[i]; }
  const std::vector<std::uint32_t>& multiplicities() const { return mult_; }
  const std::vector<Vertex>& flat_tuples() const { return flat_; }

  // Sum over tuples of multiplicity times occurrences of v.
  std::vector<std::size_t> degrees() const;
  // Total edge count including multiplicity.
  std::size_t num_edges() const;
  bool is_simple() const;

  friend bool operator==(const MultiHypergraph& a, const MultiHypergraph& b) {
    return a.k_ == b.k_ && a.n_ == b.n_ && a.flat_ == b.flat_ &&
           a.mult_ == b.mult_;
  }

 private:
  friend MultiHypergraph MakeMultiHypergraph(
      int, int, const std::vector<std::vector<Vertex>>&,
      const std::vector<std::uint32_t>&);

  int k_ = 0;
  int n_ = 0;
  std::vector<Vertex> flat_;
  std::vector<std::uint32_t> mult_;
};

// Validates and normalizes: each tuple is sorted, the edge list sorted.
// Throws std::invalid_argument on k < 2, k > n, out-of-range ids, repeated
// ids within a tuple, or duplicate edges.
Hypergraph MakeHypergraph(int k, int n,
                          const std::vector<std::vector<Vertex>>& raw_edges);

// Same contract for edges already stored flat (k ids per edge, any order).
Hypergraph MakeHypergraphFlat(int k, int n, std::vector<Vertex> flat);

// Trusted constructor: `flat` already normalized.
Hypergraph MakeHypergraphFromSortedFlat(int k, int n, std::vector<Vertex> flat);

// Tuples are sorted internally; equal tuples are merged by summing their
// multiplicities. An empty `multiplicities` means all ones.
MultiHypergraph MakeMultiHypergraph(
    int k, int n, const std::vector<std::vector<Vertex>>& tuples,
    const std::vector<std::uint32_t>& multiplicities = {});

MultiHypergraph ToMulti(const Hypergraph& h);
// Lossless when every tuple is strictly increasing with multiplicity 1.
std::optional<Hypergraph> ToSimple(const MultiHypergraph& h);

// Image of h under v -> perm[v]. `perm` must be a permutation of 0..n-1.
Hypergraph Permute(const Hypergraph& h, std::span<const Vertex> perm);
MultiHypergraph Permute(const MultiHypergraph& h, std::span<const Vertex> perm);

// The (k-1)-uniform hypergraph {e \ {v} : v in e} on the other n-1 vertices,
// ids above v shifted down by one. Requires k >= 3.
Hypergraph Link(const Hypergraph& h, Vertex v);

// Co-occurrence adjacency in CSR form. Self-loops, repeats and
// multiplicities are dropped; neighbor lists ascending.
struct Adjacency {
  std::vector<std::uint32_t> offsets;
  std::vector<Vertex> neighbors;

  std::size_t num_vertices() const {
    return offsets.empty() ? 0 : offsets.size() - 1;
  }
  std::span<const Vertex> of(Vertex v) const {
    return {neighbors.data() + offsets[v], offsets[v + 1] - offsets[v]};
  }
};

Adjacency BuildAdjacency(const Hypergraph& h);
Adjacency BuildAdjacency(const MultiHypergraph& h);

struct LayerDecomposition {
  Vertex root = 0;
  // layers[0] == {root}; each layer sorted ascending.
  std::vector<std::vector<Vertex>> layers;

  std::vector<std::size_t> sizes() const;
};

// BFS layers S_0..S_L around v with L = min(lmax, eccentricity of v).
LayerDecomposition BfsLayers(const Adjacency& adj, Vertex v, int lmax);
LayerDecomposition BfsLayers(const Hypergraph& h, Vertex v, int lmax);
LayerDecomposition BfsLayers(const MultiHypergraph& h, Vertex v, int lmax);

// Number of edges of h contained in the vertex set s (duplicates in s are
// ignored).
std::size_t EdgesWithin(const Hypergraph& h, std::span<const Vertex> s);

struct DenseWitness {
  std::vector<std::size_t> edges;  // connected edge subset, ascending
  std::vector<Vertex> vertices;    // union of those edges, ascending
};

// Exhaustive search over connected edge subsets of size t <= tmax for one
// whose vertex union S has |S| <= t(k-1) - 1, i.e. e_H(S) > |S|/(k-1).
// Returns the witness with the fewest edges, ties broken by smaller |S| and
// then by enumeration order.
std::optional<DenseWitness> FindDenseWitness(const Hypergraph& h, int tmax);

}  // namespace hyperiso

#endif  // HYPERISO_HYPERGRAPH_H_
