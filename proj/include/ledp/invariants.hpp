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

#ifndef LEDP_INVARIANTS_HPP_
#define LEDP_INVARIANTS_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "ledp/errors.hpp"
#include "ledp/graph.hpp"
#include "ledp/level_params.hpp"

namespace ledp {

struct InvariantViolation {
  NodeId node;
  std::int64_t level;
  std::int64_t count;  // neighbors in the relevant suffix Z_r
  double bound;
};

namespace internal {

// Number of neighbors of v whose level is at least `r`.
inline std::int64_t CountInSuffix(const Graph& g,
                                  std::span<const std::int64_t> levels,
                                  NodeId v, std::int64_t r) {
  std::int64_t c = 0;
  for (NodeId u : g.neighbors(v)) c += levels[u] >= r;
  return c;
}

inline void CheckLevels(const Graph& g, std::span<const std::int64_t> levels,
                        const LevelParams& p) {
  if (static_cast<std::int64_t>(levels.size()) != g.num_nodes()) {
    throw ValidationError("level vector size differs from node count");
  }
  for (std::int64_t l : levels) {
    if (l < 0 || l >= p.total_levels()) throw DomainError("level out of range");
  }
}

}  // namespace internal

// A node on level r below the top has at most (1+psi)^{F(r)} + slack
// neighbors in Z_r.
inline std::vector<InvariantViolation> CheckInvariantDegreeUpper(
    const Graph& g, std::span<const std::int64_t> levels,
    const LevelParams& p, double slack) {
  internal::CheckLevels(g, levels, p);
  std::vector<InvariantViolation> out;
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    std::int64_t r = levels[v];
    if (r >= p.total_levels() - 1) continue;
    std::int64_t count = internal::CountInSuffix(g, levels, v, r);
    double bound = p.LevelThreshold(r) + slack;
    if (static_cast<double>(count) > bound) out.push_back({v, r, count, bound});
  }
  return out;
}

// A node on level r > 0 has at least (1+psi)^{F(r-1)} - slack neighbors in
// Z_{r-1}.
inline std::vector<InvariantViolation> CheckInvariantDegreeLower(
    const Graph& g, std::span<const std::int64_t> levels,
    const LevelParams& p, double slack) {
  internal::CheckLevels(g, levels, p);
  std::vector<InvariantViolation> out;
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    std::int64_t r = levels[v];
    if (r == 0) continue;
    std::int64_t count = internal::CountInSuffix(g, levels, v, r - 1);
    double bound = p.LevelThreshold(r - 1) - slack;
    if (static_cast<double>(count) < bound) out.push_back({v, r, count, bound});
  }
  return out;
}

}  // namespace ledp

#endif  // LEDP_INVARIANTS_HPP_
