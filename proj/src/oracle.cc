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

#include "hyperiso/oracle.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <string>
#include <unordered_map>

#include "hyperiso/canon.h"
#include "hyperiso/random.h"
#include "hyperiso/regcanon.h"

namespace hyperiso {
namespace {

constexpr Vertex kUnmapped = ~Vertex{0};

void CheckGuard(int n, int max_n) {
  if (n > max_n) {
    throw GuardError("oracle size guard: n = " + std::to_string(n) +
                     " exceeds max_n = " + std::to_string(max_n));
  }
}

// Degree followed by the full distance profile.
std::vector<std::vector<std::uint32_t>> OracleInvariants(const Hypergraph& h) {
  const int n = h.n();
  const auto profiles = DistanceProfiles(h, std::max(1, n));
  std::vector<std::vector<std::uint32_t>> out(n);
  for (int v = 0; v < n; ++v) {
    out[v].push_back(static_cast<std::uint32_t>(h.degree(v)));
    out[v].insert(out[v].end(), profiles[v].sizes.begin(),
                  profiles[v].sizes.end());
  }
  return out;
}

class IsoSearch {
 public:
  IsoSearch(const Hypergraph& a, const Hypergraph& b)
      : a_(a), b_(b), adj_a_(BuildAdjacency(a)) {
    inv_a_ = OracleInvariants(a);
    inv_b_ = OracleInvariants(b);
  }

  // Optionally forces a[first] -> b[second] before searching.
  std::optional<std::vector<Vertex>> Run(
      std::optional<std::pair<Vertex, Vertex>> forced = std::nullopt) {
    const int n = a_.n();
    if (a_.k() != b_.k() || n != b_.n() ||
        a_.num_edges() != b_.num_edges()) {
      return std::nullopt;
    }
    {
      auto sa = inv_a_;
      auto sb = inv_b_;
      std::sort(sa.begin(), sa.end());
      std::sort(sb.begin(), sb.end());
      if (sa != sb) return std::nullopt;
    }
    map_ab_.assign(n, kUnmapped);
    map_ba_.assign(n, kUnmapped);
    BuildOrder(forced ? std::optional<Vertex>(forced->first) : std::nullopt);
    if (forced) {
      if (inv_a_[forced->first] != inv_b_[forced->second]) return std::nullopt;
      if (!Assign(forced->first, forced->second)) return std::nullopt;
      if (Extend(1)) return map_ab_;
      return std::nullopt;
    }
    if (Extend(0)) return map_ab_;
    return std::nullopt;
  }

 private:
  void BuildOrder(std::optional<Vertex> first) {
    const int n = a_.n();
    std::map<std::vector<std::uint32_t>, int> class_size;
    for (const auto& inv : inv_a_) ++class_size[inv];
    std::vector<bool> placed(n, false);
    std::vector<int> placed_nbrs(n, 0);
    order_.clear();
    auto place = [&](Vertex v) {
      placed[v] = true;
      order_.push_back(v);
      for (Vertex w : adj_a_.of(v)) ++placed_nbrs[w];
    };
    if (first) place(*first);
    while (static_cast<int>(order_.size()) < n) {
      int best = -1;
      for (int v = 0; v < n; ++v) {
        if (placed[v]) continue;
        if (best < 0) {
          best = v;
          continue;
        }
        const int cv = class_size[inv_a_[v]];
        const int cb = class_size[inv_a_[best]];
        if (cv < cb || (cv == cb && placed_nbrs[v] > placed_nbrs[best])) {
          best = v;
        }
      }
      place(static_cast<Vertex>(best));
    }
  }

  // Maps x -> y and checks every edge now fully inside the mapped region, in
  // both directions. Undoes the assignment on failure.
  bool Assign(Vertex x, Vertex y) {
    map_ab_[x] = y;
    map_ba_[y] = x;
    if (Consistent(a_, b_, map_ab_, x) && Consistent(b_, a_, map_ba_, y)) {
      return true;
    }
    map_ab_[x] = kUnmapped;
    map_ba_[y] = kUnmapped;
    return false;
  }

  bool Consistent(const Hypergraph& from, const Hypergraph& to,
                  const std::vector<Vertex>& map, Vertex x) {
    std::vector<Vertex> image(from.k());
    for (std::uint32_t e : from.incident(x)) {
      const auto edge = from.edge(e);
      bool complete = true;
      for (std::size_t i = 0; i < edge.size(); ++i) {
        image[i] = map[edge[i]];
        if (image[i] == kUnmapped) {
          complete = false;
          break;
        }
      }
      if (!complete) continue;
      std::sort(image.begin(), image.end());
      if (!to.has_edge(image)) return false;
    }
    return true;
  }

  bool Extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const Vertex x = order_[depth];
    for (Vertex y = 0; y < static_cast<Vertex>(b_.n()); ++y) {
      if (map_ba_[y] != kUnmapped || inv_a_[x] != inv_b_[y]) continue;
      if (!Assign(x, y)) continue;
      if (Extend(depth + 1)) return true;
      map_ab_[x] = kUnmapped;
      map_ba_[y] = kUnmapped;
    }
    return false;
  }

  const Hypergraph& a_;
  const Hypergraph& b_;
  Adjacency adj_a_;
  std::vector<std::vector<std::uint32_t>> inv_a_;
  std::vector<std::vector<std::uint32_t>> inv_b_;
  std::vector<Vertex> order_;
  std::vector<Vertex> map_ab_;
  std::vector<Vertex> map_ba_;
};

}  // namespace

std::optional<std::vector<Vertex>> BruteIso(const Hypergraph& a,
                                            const Hypergraph& b, int max_n) {
  CheckGuard(std::max(a.n(), b.n()), max_n);
  return IsoSearch(a, b).Run();
}

bool AutomorphismTrivial(const Hypergraph& h, int max_n) {
  CheckGuard(h.n(), max_n);
  const auto inv = OracleInvariants(h);
  IsoSearch search(h, h);
  for (Vertex x = 0; x < static_cast<Vertex>(h.n()); ++x) {
    for (Vertex y = x + 1; y < static_cast<Vertex>(h.n()); ++y) {
      if (inv[x] != inv[y]) continue;
      // Any nontrivial automorphism moves some x to some y != x; the orbit of
      // x then also contains a larger id, so checking y > x suffices.
      if (search.Run(std::make_pair(x, y))) return false;
    }
  }
  return true;
}

std::vector<std::pair<Vertex, Vertex>> LinkCollisionPairs(const Hypergraph& h,
                                                          int max_n) {
  if (h.k() < 3) throw std::invalid_argument("links require k >= 3");
  const int n = h.n();
  std::vector<Hypergraph> links;
  std::vector<std::optional<Certificate>> certs;
  std::vector<std::vector<std::size_t>> degree_seqs;
  links.reserve(n);
  for (int v = 0; v < n; ++v) {
    links.push_back(Link(h, v));
    const LabelingOutcome outcome = CanonicalLabeling(links.back());
    certs.push_back(outcome.success()
                        ? std::optional(MakeCertificate(links.back(), outcome))
                        : std::nullopt);
    auto deg = links.back().degrees();
    std::sort(deg.begin(), deg.end());
    degree_seqs.push_back(std::move(deg));
  }
  std::vector<std::pair<Vertex, Vertex>> out;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (links[i].num_edges() != links[j].num_edges() ||
          degree_seqs[i] != degree_seqs[j]) {
        continue;
      }
      bool iso = false;
      if (certs[i] && certs[j]) {
        iso = *certs[i] == *certs[j];
      } else if (!certs[i] && !certs[j]) {
        iso = BruteIso(links[i], links[j], max_n).has_value();
      }
      if (iso) out.emplace_back(i, j);
    }
  }
  return out;
}

mpq_class OccupancyDist::P(int j) const {
  if (j < j_min || j > j_max) return 0;
  return probs[j - j_min];
}

mpq_class OccupancyDist::Total() const {
  mpq_class total = 0;
  for (const auto& p : probs) total += p;
  return total;
}

namespace {

mpz_class Choose(unsigned long n, unsigned long k) {
  mpz_class out;
  if (k > n) return 0;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

mpz_class Power(unsigned long base, unsigned long exp) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), base, exp);
  return out;
}

}  // namespace

OccupancyDist OccupancyExact(int mu, int r, int s) {
  if (mu < 1 || r < 1) throw std::invalid_argument("need mu >= 1, r >= 1");
  if (s < 1 || static_cast<long>(s) > static_cast<long>(r) * mu) {
    throw std::invalid_argument("need 1 <= s <= r*mu");
  }
  OccupancyDist dist;
  dist.mu = mu;
  dist.r = r;
  dist.s = s;
  dist.j_min = (s + 1) / 2;
  dist.j_max = std::min(s, mu);
  const mpz_class denom = Choose(static_cast<unsigned long>(r) * mu, s);
  const unsigned long pairs = static_cast<unsigned long>(r) * (r - 1) / 2;
  for (int j = dist.j_min; j <= dist.j_max; ++j) {
    const mpz_class num = Choose(mu, j) * Choose(j, s - j) *
                          Power(r, 2 * j - s) * Power(pairs, s - j);
    mpq_class p(num, denom);
    p.canonicalize();
    dist.probs.push_back(std::move(p));
  }
  return dist;
}

mpq_class OccupancyRatio(int mu, int r, int s, int j) {
  if (r < 2) throw std::invalid_argument("ratio needs r >= 2");
  if (2 * j < s || j >= s) throw std::invalid_argument("need s/2 <= j < s");
  mpq_class num(mpz_class(mu - j) * (s - j) * 2 * r);
  mpq_class den(mpz_class(2 * j + 2 - s) * (2 * j + 1 - s) * (r - 1));
  mpq_class out = num / den;
  out.canonicalize();
  return out;
}

std::pair<int, int> DrawOccupancy(int mu, int r, int s, std::uint64_t seed) {
  SplitMix64 rng(seed);
  const std::uint64_t points = static_cast<std::uint64_t>(r) * mu;
  // Partial Fisher-Yates over the virtual array 0..points-1.
  std::unordered_map<std::uint64_t, std::uint64_t> swapped;
  auto at = [&](std::uint64_t i) {
    auto it = swapped.find(i);
    return it == swapped.end() ? i : it->second;
  };
  std::unordered_map<std::uint64_t, int> per_block;
  int max_in_block = 0;
  for (int i = 0; i < s; ++i) {
    const std::uint64_t j = i + rng.Below(points - i);
    const std::uint64_t chosen = at(j);
    swapped[j] = at(i);
    const int c = ++per_block[chosen / r];
    max_in_block = std::max(max_in_block, c);
  }
  return {static_cast<int>(per_block.size()), max_in_block};
}

OccupancySample OccupancyMonteCarlo(int mu, int r, int s,
                                    std::uint64_t trials, std::uint64_t seed) {
  if (mu < 1 || r < 1 || s < 1 ||
      static_cast<long>(s) > static_cast<long>(r) * mu) {
    throw std::invalid_argument("need mu, r >= 1 and 1 <= s <= r*mu");
  }
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  OccupancySample out;
  out.mu = mu;
  out.r = r;
  out.s = s;
  out.trials = trials;
  const int support = std::min(s, mu) + 1;
  out.counts.assign(support, 0);
  out.counts_max2.assign(support, 0);
  for (std::uint64_t d = 0; d < trials; ++d) {
    const auto [x, max_in_block] = DrawOccupancy(mu, r, s, DeriveSeed(seed, d));
    ++out.counts[x];
    if (max_in_block <= 2) {
      ++out.counts_max2[x];
    } else {
      ++out.max3_or_more;
    }
  }
  return out;
}

double ConditionalTotalVariation(const OccupancyDist& exact,
                                 const OccupancySample& sample) {
  const double total = exact.Total().get_d();
  const double kept = static_cast<double>(sample.trials_max2());
  double tv = 0.0;
  const int top = static_cast<int>(sample.counts_max2.size()) - 1;
  for (int j = 0; j <= top; ++j) {
    const double p = total > 0 ? exact.P(j).get_d() / total : 0.0;
    const double q = kept > 0 ? sample.counts_max2[j] / kept : 0.0;
    tv += std::abs(p - q);
  }
  return tv / 2.0;
}

}  // namespace hyperiso
