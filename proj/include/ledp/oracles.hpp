// Copyright 2026 The ledpgraph Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LEDP_ORACLES_HPP_
#define LEDP_ORACLES_HPP_

#include <algorithm>
#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ledp/errors.hpp"
#include "ledp/graph.hpp"

namespace ledp {

// Exact per-node core numbers.
using CoreVector = std::vector<std::int64_t>;
// Approximate per-node core numbers.
using CoreEstimates = std::vector<double>;

struct DensestResult {
  std::vector<NodeId> nodes;  // sorted
  Density density;
};

inline constexpr NodeId kBruteForceMaxNodes = 24;

// a if x < a, b if x > b, x otherwise.
inline std::int64_t Clamp(std::int64_t x, std::int64_t a, std::int64_t b) {
  if (a > b) throw DomainError("clamp with a > b");
  return x < a ? a : (x > b ? b : x);
}

// Batagelj-Zaversnik bucket peeling, O(n + m).
inline CoreVector ExactCoreNumbers(const Graph& g) {
  const NodeId n = g.num_nodes();
  CoreVector deg(n);
  std::int64_t max_deg = 0;
  for (NodeId v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    max_deg = std::max(max_deg, deg[v]);
  }
  std::vector<std::int64_t> bin(max_deg + 2, 0);
  for (NodeId v = 0; v < n; ++v) ++bin[deg[v]];
  std::int64_t start = 0;
  for (std::int64_t d = 0; d <= max_deg; ++d) {
    std::int64_t c = bin[d];
    bin[d] = start;
    start += c;
  }
  std::vector<NodeId> vert(n);
  std::vector<std::int64_t> pos(n);
  for (NodeId v = 0; v < n; ++v) {
    pos[v] = bin[deg[v]]++;
    vert[pos[v]] = v;
  }
  for (std::int64_t d = max_deg; d > 0; --d) bin[d] = bin[d - 1];
  bin[0] = 0;
  for (std::int64_t i = 0; i < n; ++i) {
    NodeId v = vert[i];
    for (NodeId u : g.neighbors(v)) {
      if (deg[u] > deg[v]) {
        std::int64_t du = deg[u];
        std::int64_t pu = pos[u];
        std::int64_t pw = bin[du];
        NodeId w = vert[pw];
        if (u != w) {
          pos[u] = pw;
          vert[pu] = w;
          pos[w] = pu;
          vert[pw] = u;
        }
        ++bin[du];
        --deg[u];
      }
    }
  }
  return deg;
}

inline std::int64_t Degeneracy(const Graph& g) {
  CoreVector k = ExactCoreNumbers(g);
  return k.empty() ? 0 : *std::max_element(k.begin(), k.end());
}

// Brute force over all nonempty subsets in Gray-code order. Among densest
// sets the one with most nodes is returned.
inline DensestResult ExactDensestSubgraph(const Graph& g) {
  const NodeId n = g.num_nodes();
  if (n > kBruteForceMaxNodes) {
    throw CapacityError("brute-force densest subgraph supports n <= " +
                        std::to_string(kBruteForceMaxNodes) + " (got " +
                        std::to_string(n) + "); use CharikarPeel instead");
  }
  DensestResult best;
  if (n == 0) return best;
  std::vector<std::uint32_t> adj(n, 0);
  for (const Edge& e : g.edges()) {
    adj[e.u] |= 1u << e.v;
    adj[e.v] |= 1u << e.u;
  }
  std::uint32_t mask = 0;
  std::int64_t edges = 0;
  std::uint32_t best_mask = 0;
  std::int64_t best_e = 0, best_n = 1;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t i = 1; i < total; ++i) {
    int v = std::countr_zero(i);
    std::uint32_t bit = 1u << v;
    std::int64_t touched = std::popcount(adj[v] & mask & ~bit);
    mask ^= bit;
    edges += (mask & bit) ? touched : -touched;
    std::int64_t nodes = std::popcount(mask);
    std::int64_t lhs = edges * best_n, rhs = best_e * nodes;
    if (best_mask == 0 || lhs > rhs || (lhs == rhs && nodes > best_n)) {
      best_mask = mask;
      best_e = edges;
      best_n = nodes;
    }
  }
  for (NodeId v = 0; v < n; ++v) {
    if (best_mask & (1u << v)) best.nodes.push_back(v);
  }
  best.density = Density{best_e, best_n};
  return best;
}

// Greedy min-degree peeling; returns the densest suffix seen, which is a
// 2-approximation.
inline DensestResult CharikarPeel(const Graph& g) {
  const NodeId n = g.num_nodes();
  DensestResult out;
  if (n == 0) return out;
  std::vector<std::int64_t> deg(n);
  std::int64_t max_deg = 0;
  for (NodeId v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    max_deg = std::max(max_deg, deg[v]);
  }
  std::vector<std::vector<NodeId>> buckets(max_deg + 1);
  for (NodeId v = 0; v < n; ++v) buckets[deg[v]].push_back(v);
  std::vector<char> removed(n, 0);
  std::vector<NodeId> order;
  order.reserve(n);
  std::int64_t edges = g.num_edges();
  std::int64_t nodes = n;
  std::int64_t best_e = edges, best_n = nodes, best_removed = 0;
  std::int64_t cur = 0;
  while (static_cast<NodeId>(order.size()) < n) {
    cur = std::max<std::int64_t>(cur - 1, 0);
    while (buckets[cur].empty()) ++cur;
    NodeId v = buckets[cur].back();
    buckets[cur].pop_back();
    if (removed[v] || deg[v] != cur) continue;
    removed[v] = 1;
    order.push_back(v);
    for (NodeId u : g.neighbors(v)) {
      if (!removed[u]) {
        --deg[u];
        buckets[deg[u]].push_back(u);
      }
    }
    edges -= cur;
    --nodes;
    if (nodes > 0 && edges * best_n > best_e * nodes) {
      best_e = edges;
      best_n = nodes;
      best_removed = static_cast<std::int64_t>(order.size());
    }
  }
  std::vector<char> gone(n, 0);
  for (std::int64_t i = 0; i < best_removed; ++i) gone[order[i]] = 1;
  for (NodeId v = 0; v < n; ++v) {
    if (!gone[v]) out.nodes.push_back(v);
  }
  out.density = Density{best_e, best_n};
  return out;
}

// Orients every edge from the earlier node in `order` to the later one and
// returns the largest out-degree.
inline std::int64_t OrientationOutdegree(const Graph& g,
                                         std::span<const NodeId> order) {
  const NodeId n = g.num_nodes();
  if (static_cast<NodeId>(order.size()) != n) {
    throw ValidationError("order is not a permutation of the nodes");
  }
  std::vector<std::int64_t> rank(n, -1);
  for (std::size_t i = 0; i < order.size(); ++i) {
    NodeId v = order[i];
    if (v < 0 || v >= n || rank[v] != -1) {
      throw ValidationError("order is not a permutation of the nodes");
    }
    rank[v] = static_cast<std::int64_t>(i);
  }
  std::int64_t best = 0;
  for (NodeId v = 0; v < n; ++v) {
    std::int64_t out = 0;
    for (NodeId u : g.neighbors(v)) out += rank[u] > rank[v];
    best = std::max(best, out);
  }
  return best;
}

}  // namespace ledp

#endif  // LEDP_ORACLES_HPP_
