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

#ifndef LEDP_GRAPH_HPP_
#define LEDP_GRAPH_HPP_

#include <algorithm>
#include <cstdint>
#include <istream>
#include <limits>
#include <random>
#include <span>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ledp/errors.hpp"
#include "ledp/rational.hpp"

namespace ledp {

using NodeId = std::int32_t;
using EdgeId = std::int64_t;

struct Edge {
  NodeId u;  // u < v
  NodeId v;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Immutable simple undirected graph over nodes 0..n-1, stored as CSR.
// Each adjacency list is sorted; incident_edges(v)[k] is the id of the edge
// to neighbors(v)[k].
class Graph {
 public:
  Graph() : offsets_(1, 0) {}

  // Duplicate pairs collapse. Self-loops and out-of-range ids throw
  // ValidationError.
  static Graph FromEdges(std::int64_t n,
                         std::vector<std::pair<NodeId, NodeId>> pairs) {
    if (n < 0 || n > std::numeric_limits<NodeId>::max()) {
      throw ValidationError("node count out of range");
    }
    Graph g;
    g.n_ = static_cast<NodeId>(n);
    g.edges_.reserve(pairs.size());
    for (auto [a, b] : pairs) {
      if (a < 0 || b < 0 || a >= n || b >= n) {
        throw ValidationError("edge endpoint out of range");
      }
      if (a == b) {
        throw ValidationError("self-loop at node " + std::to_string(a));
      }
      g.edges_.push_back(Edge{std::min(a, b), std::max(a, b)});
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()),
                   g.edges_.end());

    g.offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
    for (const Edge& e : g.edges_) {
      ++g.offsets_[e.u + 1];
      ++g.offsets_[e.v + 1];
    }
    for (std::size_t i = 1; i < g.offsets_.size(); ++i) {
      g.offsets_[i] += g.offsets_[i - 1];
    }
    g.neighbors_.resize(2 * g.edges_.size());
    g.edge_ids_.resize(2 * g.edges_.size());
    std::vector<EdgeId> fill(g.offsets_.begin(), g.offsets_.end() - 1);
    // Edges are sorted by (u, v), so every adjacency list comes out sorted.
    for (EdgeId id = 0; id < static_cast<EdgeId>(g.edges_.size()); ++id) {
      const Edge& e = g.edges_[id];
      g.neighbors_[fill[e.u]] = e.v;
      g.edge_ids_[fill[e.u]++] = id;
      g.neighbors_[fill[e.v]] = e.u;
      g.edge_ids_[fill[e.v]++] = id;
    }
    return g;
  }

  NodeId num_nodes() const { return n_; }
  std::int64_t num_edges() const {
    return static_cast<std::int64_t>(edges_.size());
  }
  std::int64_t degree(NodeId v) const {
    return offsets_[v + 1] - offsets_[v];
  }
  std::span<const NodeId> neighbors(NodeId v) const {
    return {neighbors_.data() + offsets_[v],
            static_cast<std::size_t>(degree(v))};
  }
  std::span<const EdgeId> incident_edges(NodeId v) const {
    return {edge_ids_.data() + offsets_[v],
            static_cast<std::size_t>(degree(v))};
  }
  const std::vector<Edge>& edges() const { return edges_; }

  bool HasEdge(NodeId a, NodeId b) const {
    if (a < 0 || b < 0 || a >= n_ || b >= n_ || a == b) return false;
    auto nb = neighbors(a);
    return std::binary_search(nb.begin(), nb.end(), b);
  }

  // Edge-neighboring graph with {a, b} added.
  Graph WithEdge(NodeId a, NodeId b) const {
    std::vector<std::pair<NodeId, NodeId>> pairs;
    pairs.reserve(edges_.size() + 1);
    for (const Edge& e : edges_) pairs.emplace_back(e.u, e.v);
    pairs.emplace_back(a, b);
    return FromEdges(n_, std::move(pairs));
  }

 private:
  NodeId n_ = 0;
  std::vector<EdgeId> offsets_;
  std::vector<NodeId> neighbors_;
  std::vector<EdgeId> edge_ids_;
  std::vector<Edge> edges_;
};

namespace internal {

// Returns false for blank and comment lines.
inline bool ParseEdgeLine(const std::string& line, std::size_t lineno,
                          std::int64_t& a, std::int64_t& b) {
  std::string body = line.substr(0, line.find('#'));
  std::istringstream in(body);
  std::string first;
  if (!(in >> first)) return false;
  std::string second, extra;
  if (!(in >> second) || (in >> extra)) {
    throw MalformedInputError(lineno, "expected two node ids");
  }
  auto parse = [&](const std::string& tok) -> std::int64_t {
    if (tok.empty() || tok.size() > 18 ||
        !std::all_of(tok.begin(), tok.end(),
                     [](char c) { return c >= '0' && c <= '9'; })) {
      throw MalformedInputError(lineno, "bad node id '" + tok + "'");
    }
    return std::stoll(tok);
  };
  a = parse(first);
  b = parse(second);
  if (a == b) {
    throw ValidationError("self-loop at line " + std::to_string(lineno));
  }
  return true;
}

}  // namespace internal

// Reads "u v" lines; node ids are used as-is, so n = max id + 1.
inline Graph LoadEdgeList(std::istream& in) {
  std::vector<std::pair<NodeId, NodeId>> pairs;
  std::int64_t max_id = -1;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::int64_t a, b;
    if (!internal::ParseEdgeLine(line, lineno, a, b)) continue;
    if (std::max(a, b) >= std::numeric_limits<NodeId>::max()) {
      throw MalformedInputError(lineno, "node id too large");
    }
    max_id = std::max({max_id, a, b});
    pairs.emplace_back(static_cast<NodeId>(a), static_cast<NodeId>(b));
  }
  return Graph::FromEdges(max_id + 1, std::move(pairs));
}

inline Graph LoadEdgeList(const std::string& text) {
  std::istringstream in(text);
  return LoadEdgeList(in);
}

struct RemappedGraph {
  Graph graph;
  std::vector<std::int64_t> original_ids;  // dense id -> file id
};

// Reads "u v" lines with arbitrary ids, assigning dense ids in order of
// first appearance.
inline RemappedGraph LoadEdgeListRemapped(std::istream& in) {
  std::unordered_map<std::int64_t, NodeId> index;
  RemappedGraph out;
  std::vector<std::pair<NodeId, NodeId>> pairs;
  auto id_of = [&](std::int64_t raw) {
    auto [it, inserted] =
        index.emplace(raw, static_cast<NodeId>(out.original_ids.size()));
    if (inserted) out.original_ids.push_back(raw);
    return it->second;
  };
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::int64_t a, b;
    if (!internal::ParseEdgeLine(line, lineno, a, b)) continue;
    NodeId x = id_of(a);
    NodeId y = id_of(b);
    pairs.emplace_back(x, y);
  }
  out.graph = Graph::FromEdges(
      static_cast<std::int64_t>(out.original_ids.size()), std::move(pairs));
  return out;
}

// |E(S)| / |S| kept as its two integer parts.
struct Density {
  std::int64_t edges = 0;
  std::int64_t nodes = 1;
  Rational value() const { return Rational(edges, nodes); }
  double ToDouble() const { return value().ToDouble(); }
};

inline Density InducedDensity(const Graph& g, std::span<const NodeId> s) {
  if (s.empty()) throw DomainError("density of an empty node set");
  std::vector<char> in(g.num_nodes(), 0);
  std::int64_t count = 0;
  for (NodeId v : s) {
    if (v < 0 || v >= g.num_nodes()) throw DomainError("node id out of range");
    if (!in[v]) {
      in[v] = 1;
      ++count;
    }
  }
  std::int64_t edges = 0;
  for (const Edge& e : g.edges()) edges += (in[e.u] && in[e.v]);
  return Density{edges, count};
}

inline std::vector<NodeId> AllNodes(const Graph& g) {
  std::vector<NodeId> all(g.num_nodes());
  for (NodeId v = 0; v < g.num_nodes(); ++v) all[v] = v;
  return all;
}

// Generators for tests and the CLI.

inline Graph ErdosRenyi(NodeId n, double p, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::vector<std::pair<NodeId, NodeId>> pairs;
  for (NodeId a = 0; a < n; ++a) {
    for (NodeId b = a + 1; b < n; ++b) {
      double u = static_cast<double>(gen() >> 11) * 0x1.0p-53;
      if (u < p) pairs.emplace_back(a, b);
    }
  }
  return Graph::FromEdges(n, std::move(pairs));
}

inline Graph CompleteGraph(NodeId k) {
  std::vector<std::pair<NodeId, NodeId>> pairs;
  for (NodeId a = 0; a < k; ++a) {
    for (NodeId b = a + 1; b < k; ++b) pairs.emplace_back(a, b);
  }
  return Graph::FromEdges(k, std::move(pairs));
}

inline Graph CycleGraph(NodeId n) {
  std::vector<std::pair<NodeId, NodeId>> pairs;
  for (NodeId a = 0; a < n; ++a) pairs.emplace_back(a, (a + 1) % n);
  return Graph::FromEdges(n, std::move(pairs));
}

inline Graph PathGraph(NodeId n) {
  std::vector<std::pair<NodeId, NodeId>> pairs;
  for (NodeId a = 0; a + 1 < n; ++a) pairs.emplace_back(a, a + 1);
  return Graph::FromEdges(n, std::move(pairs));
}

// K_{1,leaves}; node 0 is the center.
inline Graph StarGraph(NodeId leaves) {
  std::vector<std::pair<NodeId, NodeId>> pairs;
  for (NodeId a = 1; a <= leaves; ++a) pairs.emplace_back(0, a);
  return Graph::FromEdges(leaves + 1, std::move(pairs));
}

inline Graph EmptyGraph(NodeId n) { return Graph::FromEdges(n, {}); }

// K4 on 0..3 plus node 4 attached to node 0.
inline Graph K4PlusPendant() {
  return Graph::FromEdges(
      5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {0, 4}});
}

// Disjoint union of K_k (nodes 0..k-1) and a complete k-ary tree with the
// given number of levels below its root.
inline Graph CliquePlusTree(NodeId k, int depth) {
  std::vector<std::pair<NodeId, NodeId>> pairs;
  for (NodeId a = 0; a < k; ++a) {
    for (NodeId b = a + 1; b < k; ++b) pairs.emplace_back(a, b);
  }
  NodeId next = k;
  std::vector<NodeId> frontier{next++};
  for (int d = 0; d < depth; ++d) {
    std::vector<NodeId> children;
    for (NodeId parent : frontier) {
      for (NodeId c = 0; c < k; ++c) {
        pairs.emplace_back(parent, next);
        children.push_back(next++);
      }
    }
    frontier = std::move(children);
  }
  return Graph::FromEdges(next, std::move(pairs));
}

}  // namespace ledp

#endif  // LEDP_GRAPH_HPP_
