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

#ifndef HYPERISO_TESTS_TEST_UTIL_H_
#define HYPERISO_TESTS_TEST_UTIL_H_

#include <vector>

#include "hyperiso/hypergraph.h"

namespace hyperiso::testing {

inline std::vector<std::vector<Vertex>> Edges(const Hypergraph& h) {
  std::vector<std::vector<Vertex>> out;
  for (std::size_t e = 0; e < h.num_edges(); ++e) {
    out.emplace_back(h.edge(e).begin(), h.edge(e).end());
  }
  return out;
}

// All k-subsets of {0..n-1}.
inline Hypergraph CompleteHypergraph(int k, int n) {
  std::vector<std::vector<Vertex>> edges;
  std::vector<Vertex> cur;
  auto rec = [&](auto&& self, Vertex start) -> void {
    if (static_cast<int>(cur.size()) == k) {
      edges.push_back(cur);
      return;
    }
    for (Vertex v = start; v < static_cast<Vertex>(n); ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return MakeHypergraph(k, n, edges);
}

inline Hypergraph Graph(int n, std::vector<std::vector<Vertex>> edges) {
  return MakeHypergraph(2, n, edges);
}

}  // namespace hyperiso::testing

#endif  // HYPERISO_TESTS_TEST_UTIL_H_
