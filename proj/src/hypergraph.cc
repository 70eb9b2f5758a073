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

#include "hyperiso/hypergraph.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace hyperiso {
namespace {

// Sorts the k-tuples stored flat in `flat` lexicographically.
std::vector<Vertex> SortTuples(int k, const std::vector<Vertex>& flat,
                               std::vector<std::size_t>* order_out = nullptr) {
  const std::size_t m = flat.size() / k;
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::lexicographical_compare(flat.begin() + a * k,
                                        flat.begin() + (a + 1) * k,
                                        flat.begin() + b * k,
                                        flat.begin() + (b + 1) * k);
  });
  std::vector<Vertex> out;
  out.reserve(flat.size());
  for (std::size_t i : order) {
    out.insert(out.end(), flat.begin() + i * k, flat.begin() + (i + 1) * k);
  }
  if (order_out != nullptr) *order_out = std::move(order);
  return out;
}

bool SameTuple(const std::vector<Vertex>& flat, int k, std::size_t a,
               std::size_t b) {
  return std::equal(flat.begin() + a * k, flat.begin() + (a + 1) * k,
                    flat.begin() + b * k);
}

void CheckShape(int k, int n) {
  if (k < 2) throw std::invalid_argument("edge size k must be >= 2");
  if (n < 0) throw std::invalid_argument("vertex count must be >= 0");
  if (k > n) {
    throw std::invalid_argument("edge size k=" + std::to_string(k) +
                                " exceeds vertex count n=" +
                                std::to_string(n));
  }
}

}  // namespace

Hypergraph::Hypergraph(int k, int n, std::vector<Vertex> flat)
    : k_(k), n_(n), flat_(std::move(flat)) {
  incidence_offsets_.assign(n_ + 1, 0);
  for (Vertex v : flat_) ++incidence_offsets_[v + 1];
  for (int v = 0; v < n_; ++v) {
    incidence_offsets_[v + 1] += incidence_offsets_[v];
  }
  incidence_.resize(flat_.size());
  std::vector<std::uint32_t> cursor(incidence_offsets_.begin(),
                                    incidence_offsets_.end() - 1);
  const std::size_t m = num_edges();
  for (std::size_t e = 0; e < m; ++e) {
    for (Vertex v : edge(e)) incidence_[cursor[v]++] = e;
  }
}

std::vector<std::size_t> Hypergraph::degrees() const {
  std::vector<std::size_t> d(n_);
  for (int v = 0; v < n_; ++v) d[v] = degree(v);
  return d;
}

bool Hypergraph::has_edge(std::span<const Vertex> e) const {
  std::size_t lo = 0;
  std::size_t hi = num_edges();
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    const auto cand = edge(mid);
    if (std::lexicographical_compare(cand.begin(), cand.end(), e.begin(),
                                     e.end())) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  return lo < num_edges() && std::ranges::equal(edge(lo), e);
}

std::vector<std::size_t> MultiHypergraph::degrees() const {
  std::vector<std::size_t> d(n_, 0);
  for (std::size_t i = 0; i < num_tuples(); ++i) {
    for (Vertex v : tuple(i)) d[v] += mult_[i];
  }
  return d;
}

std::size_t MultiHypergraph::num_edges() const {
  return std::accumulate(mult_.begin(), mult_.end(), std::size_t{0});
}

bool MultiHypergraph::is_simple() const {
  for (std::size_t i = 0; i < num_tuples(); ++i) {
    if (mult_[i] != 1) return false;
    const auto t = tuple(i);
    if (std::adjacent_find(t.begin(), t.end()) != t.end()) return false;
  }
  return true;
}

Hypergraph MakeHypergraphFlat(int k, int n, std::vector<Vertex> flat) {
  CheckShape(k, n);
  if (flat.size() % k != 0) {
    throw std::invalid_argument("flat edge list length not a multiple of k");
  }
  const std::size_t m = flat.size() / k;
  for (std::size_t e = 0; e < m; ++e) {
    auto first = flat.begin() + e * k;
    auto last = first + k;
    std::sort(first, last);
    if (*(last - 1) >= static_cast<Vertex>(n)) {
      throw std::invalid_argument("edge " + std::to_string(e) +
                                  ": vertex id " +
                                  std::to_string(*(last - 1)) +
                                  " out of range");
    }
    if (std::adjacent_find(first, last) != last) {
      throw std::invalid_argument("edge " + std::to_string(e) +
                                  ": repeated vertex " +
                                  std::to_string(*std::adjacent_find(first, last)));
    }
  }
  std::vector<Vertex> sorted = SortTuples(k, flat);
  for (std::size_t e = 1; e < m; ++e) {
    if (SameTuple(sorted, k, e - 1, e)) {
      throw std::invalid_argument("duplicate edge");
    }
  }
  return MakeHypergraphFromSortedFlat(k, n, std::move(sorted));
}

Hypergraph MakeHypergraph(int k, int n,
                          const std::vector<std::vector<Vertex>>& raw_edges) {
  CheckShape(k, n);
  std::vector<Vertex> flat;
  flat.reserve(raw_edges.size() * k);
  for (std::size_t e = 0; e < raw_edges.size(); ++e) {
    if (raw_edges[e].size() != static_cast<std::size_t>(k)) {
      throw std::invalid_argument("edge " + std::to_string(e) + " has " +
                                  std::to_string(raw_edges[e].size()) +
                                  " vertices, expected " + std::to_string(k));
    }
    flat.insert(flat.end(), raw_edges[e].begin(), raw_edges[e].end());
  }
  return MakeHypergraphFlat(k, n, std::move(flat));
}

Hypergraph MakeHypergraphFromSortedFlat(int k, int n,
                                        std::vector<Vertex> flat) {
  return Hypergraph(k, n, std::move(flat));
}

MultiHypergraph MakeMultiHypergraph(
    int k, int n, const std::vector<std::vector<Vertex>>& tuples,
    const std::vector<std::uint32_t>& multiplicities) {
  if (k < 2) throw std::invalid_argument("edge size k must be >= 2");
  if (n < 1) throw std::invalid_argument("vertex count must be >= 1");
  if (!multiplicities.empty() && multiplicities.size() != tuples.size()) {
    throw std::invalid_argument("multiplicity count does not match tuples");
  }
  std::vector<Vertex> flat;
  flat.reserve(tuples.size() * k);
  for (std::size_t i = 0; i < tuples.size(); ++i) {
    if (tuples[i].size() != static_cast<std::size_t>(k)) {
      throw std::invalid_argument("tuple " + std::to_string(i) +
                                  " has wrong size");
    }
    for (Vertex v : tuples[i]) {
      if (v >= static_cast<Vertex>(n)) {
        throw std::invalid_argument("tuple " + std::to_string(i) +
                                    ": vertex id out of range");
      }
    }
    if (!multiplicities.empty() && multiplicities[i] == 0) {
      throw std::invalid_argument("tuple " + std::to_string(i) +
                                  ": multiplicity must be positive");
    }
    auto first = flat.insert(flat.end(), tuples[i].begin(), tuples[i].end());
    std::sort(first, flat.end());
  }
  std::vector<std::size_t> order;
  std::vector<Vertex> sorted = SortTuples(k, flat, &order);

  MultiHypergraph out;
  out.k_ = k;
  out.n_ = n;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const std::uint32_t mult =
        multiplicities.empty() ? 1 : multiplicities[order[i]];
    if (i > 0 && SameTuple(sorted, k, i - 1, i)) {
      out.mult_.back() += mult;
      continue;
    }
    out.flat_.insert(out.flat_.end(), sorted.begin() + i * k,
                     sorted.begin() + (i + 1) * k);
    out.mult_.push_back(mult);
  }
  return out;
}

MultiHypergraph ToMulti(const Hypergraph& h) {
  std::vector<std::vector<Vertex>> tuples;
  tuples.reserve(h.num_edges());
  for (std::size_t e = 0; e < h.num_edges(); ++e) {
    tuples.emplace_back(h.edge(e).begin(), h.edge(e).end());
  }
  return MakeMultiHypergraph(h.k(), h.n(), tuples);
}

std::optional<Hypergraph> ToSimple(const MultiHypergraph& h) {
  if (!h.is_simple() || h.k() > h.n()) return std::nullopt;
  return MakeHypergraphFromSortedFlat(h.k(), h.n(), h.flat_tuples());
}

Hypergraph Permute(const Hypergraph& h, std::span<const Vertex> perm) {
  std::vector<Vertex> flat = h.flat_edges();
  for (Vertex& v : flat) v = perm[v];
  return MakeHypergraphFlat(h.k(), h.n(), std::move(flat));
}

MultiHypergraph Permute(const MultiHypergraph& h,
                        std::span<const Vertex> perm) {
  std::vector<std::vector<Vertex>> tuples;
  for (std::size_t i = 0; i < h.num_tuples(); ++i) {
    std::vector<Vertex> t;
    for (Vertex v : h.tuple(i)) t.push_back(perm[v]);
    tuples.push_back(std::move(t));
  }
  return MakeMultiHypergraph(h.k(), h.n(), tuples, h.multiplicities());
}

Hypergraph Link(const Hypergraph& h, Vertex v) {
  if (h.k() < 3) {
    throw std::invalid_argument("links are only formed for k >= 3");
  }
  if (v >= static_cast<Vertex>(h.n())) {
    throw std::invalid_argument("link vertex out of range");
  }
  const int k = h.k() - 1;
  std::vector<Vertex> flat;
  flat.reserve(h.degree(v) * k);
  // Edges of h containing v are visited in sorted order, and deleting v plus
  // the order-preserving shift keeps them sorted.
  for (std::uint32_t e : h.incident(v)) {
    for (Vertex u : h.edge(e)) {
      if (u != v) flat.push_back(u > v ? u - 1 : u);
    }
  }
  return MakeHypergraphFromSortedFlat(k, h.n() - 1, std::move(flat));
}

namespace {

template <typename TupleAt>
Adjacency BuildAdjacencyImpl(int n, int k, std::size_t m, TupleAt tuple_at) {
  std::vector<std::vector<Vertex>> nbrs(n);
  for (std::size_t e = 0; e < m; ++e) {
    const std::span<const Vertex> t = tuple_at(e);
    for (int a = 0; a < k; ++a) {
      for (int b = 0; b < k; ++b) {
        if (t[a] != t[b]) nbrs[t[a]].push_back(t[b]);
      }
    }
  }
  Adjacency adj;
  adj.offsets.assign(n + 1, 0);
  for (int v = 0; v < n; ++v) {
    auto& list = nbrs[v];
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    adj.offsets[v + 1] = adj.offsets[v] + list.size();
  }
  adj.neighbors.reserve(adj.offsets.back());
  for (const auto& list : nbrs) {
    adj.neighbors.insert(adj.neighbors.end(), list.begin(), list.end());
  }
  return adj;
}

}  // namespace

Adjacency BuildAdjacency(const Hypergraph& h) {
  return BuildAdjacencyImpl(h.n(), h.k(), h.num_edges(),
                            [&](std::size_t e) { return h.edge(e); });
}

Adjacency BuildAdjacency(const MultiHypergraph& h) {
  return BuildAdjacencyImpl(h.n(), h.k(), h.num_tuples(),
                            [&](std::size_t e) { return h.tuple(e); });
}

std::vector<std::size_t> LayerDecomposition::sizes() const {
  std::vector<std::size_t> out;
  out.reserve(layers.size());
  for (const auto& layer : layers) out.push_back(layer.size());
  return out;
}

LayerDecomposition BfsLayers(const Adjacency& adj, Vertex v, int lmax) {
  if (v >= adj.num_vertices()) {
    throw std::invalid_argument("BFS root out of range");
  }
  if (lmax < 1) throw std::invalid_argument("lmax must be >= 1");
  LayerDecomposition out;
  out.root = v;
  out.layers.push_back({v});
  std::vector<bool> seen(adj.num_vertices(), false);
  seen[v] = true;
  for (int level = 1; level <= lmax; ++level) {
    std::vector<Vertex> next;
    for (Vertex u : out.layers.back()) {
      for (Vertex w : adj.of(u)) {
        if (!seen[w]) {
          seen[w] = true;
          next.push_back(w);
        }
      }
    }
    if (next.empty()) break;
    std::sort(next.begin(), next.end());
    out.layers.push_back(std::move(next));
  }
  return out;
}

LayerDecomposition BfsLayers(const Hypergraph& h, Vertex v, int lmax) {
  return BfsLayers(BuildAdjacency(h), v, lmax);
}

LayerDecomposition BfsLayers(const MultiHypergraph& h, Vertex v, int lmax) {
  return BfsLayers(BuildAdjacency(h), v, lmax);
}

std::size_t EdgesWithin(const Hypergraph& h, std::span<const Vertex> s) {
  std::vector<bool> in(h.n(), false);
  for (Vertex v : s) {
    if (v >= static_cast<Vertex>(h.n())) {
      throw std::invalid_argument("vertex set contains out-of-range id");
    }
    in[v] = true;
  }
  std::size_t count = 0;
  for (std::size_t e = 0; e < h.num_edges(); ++e) {
    const auto t = h.edge(e);
    if (std::all_of(t.begin(), t.end(), [&](Vertex u) { return in[u]; })) {
      ++count;
    }
  }
  return count;
}

namespace {

// ESU-style enumeration of connected edge subsets (each subset visited once,
// rooted at its smallest edge index).
class DenseWitnessSearch {
 public:
  DenseWitnessSearch(const Hypergraph& h, int tmax) : h_(h), tmax_(tmax) {
    const std::size_t m = h.num_edges();
    edge_nbrs_.resize(m);
    for (std::size_t e = 0; e < m; ++e) {
      for (Vertex v : h.edge(e)) {
        for (std::uint32_t f : h.incident(v)) {
          if (f != e) edge_nbrs_[e].push_back(f);
        }
      }
      auto& list = edge_nbrs_[e];
      std::sort(list.begin(), list.end());
      list.erase(std::unique(list.begin(), list.end()), list.end());
    }
    vertex_count_.assign(h.n(), 0);
    in_subset_.assign(m, false);
    near_subset_.assign(m, 0);
  }

  std::optional<DenseWitness> Run() {
    for (std::size_t root = 0; root < h_.num_edges(); ++root) {
      root_ = root;
      Add(root);
      std::vector<std::size_t> ext;
      for (std::uint32_t f : edge_nbrs_[root]) {
        if (f > root) ext.push_back(f);
      }
      Extend(ext);
      Remove(root);
    }
    return best_;
  }

 private:
  void Add(std::size_t e) {
    subset_.push_back(e);
    in_subset_[e] = true;
    ++near_subset_[e];
    for (std::uint32_t f : edge_nbrs_[e]) ++near_subset_[f];
    for (Vertex v : h_.edge(e)) {
      if (vertex_count_[v]++ == 0) ++union_size_;
    }
  }

  void Remove(std::size_t e) {
    subset_.pop_back();
    in_subset_[e] = false;
    --near_subset_[e];
    for (std::uint32_t f : edge_nbrs_[e]) --near_subset_[f];
    for (Vertex v : h_.edge(e)) {
      if (--vertex_count_[v] == 0) --union_size_;
    }
  }

  void Check() {
    const std::size_t t = subset_.size();
    if (union_size_ + 1 > t * (h_.k() - 1)) return;
    if (best_.has_value() &&
        (best_->edges.size() < t ||
         (best_->edges.size() == t && best_->vertices.size() <= union_size_))) {
      return;
    }
    DenseWitness w;
    w.edges = subset_;
    std::sort(w.edges.begin(), w.edges.end());
    for (Vertex v = 0; v < static_cast<Vertex>(h_.n()); ++v) {
      if (vertex_count_[v] > 0) w.vertices.push_back(v);
    }
    best_ = std::move(w);
  }

  // `ext` holds candidate edges adjacent to the subset, all > root.
  void Extend(std::vector<std::size_t> ext) {
    Check();
    if (static_cast<int>(subset_.size()) == tmax_) return;
    while (!ext.empty()) {
      const std::size_t w = ext.back();
      ext.pop_back();
      // Exclusive neighbors of w: not in, and not adjacent to, the subset.
      std::vector<std::size_t> next = ext;
      for (std::uint32_t u : edge_nbrs_[w]) {
        if (u > root_ && near_subset_[u] == 0) next.push_back(u);
      }
      Add(w);
      Extend(std::move(next));
      Remove(w);
    }
  }

  const Hypergraph& h_;
  const int tmax_;
  std::vector<std::vector<std::uint32_t>> edge_nbrs_;
  std::vector<std::uint32_t> vertex_count_;
  std::vector<bool> in_subset_;
  std::vector<std::uint32_t> near_subset_;
  std::vector<std::size_t> subset_;
  std::size_t union_size_ = 0;
  std::size_t root_ = 0;
  std::optional<DenseWitness> best_;
};

}  // namespace

std::optional<DenseWitness> FindDenseWitness(const Hypergraph& h, int tmax) {
  if (tmax < 1) throw std::invalid_argument("tmax must be >= 1");
  return DenseWitnessSearch(h, tmax).Run();
}

}  // namespace hyperiso
