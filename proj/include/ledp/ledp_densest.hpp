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

#ifndef LEDP_LEDP_DENSEST_HPP_
#define LEDP_LEDP_DENSEST_HPP_

#include <cmath>
#include <cstdint>
#include <utility>
#include <vector>

#include "ledp/core_decomposition.hpp"
#include "ledp/graph.hpp"
#include "ledp/ledger.hpp"
#include "ledp/level_params.hpp"
#include "ledp/noise.hpp"
#include "ledp/options.hpp"
#include "ledp/rational.hpp"
#include "ledp/transcript.hpp"

namespace ledp {

struct DensestOutput {
  std::vector<NodeId> nodes;  // sorted
  // Sum of the released noisy degrees of `nodes`.
  std::int64_t noisy_degree_sum = 0;
  // noisy_degree_sum / (2|S|) - c log^3 n / epsilon.
  Rational reported_density;
  // Copy and level whose suffix was chosen; -1 when falling back to V.
  std::int64_t group = -1;
  std::int64_t level = 0;
};

struct LedpDensestResult {
  DensestOutput output;
  Transcript transcript;
  BudgetLedger ledger{1.0};
  std::int64_t max_abs_noise = 0;
};

namespace internal {

using NoisyDegrees =
    std::vector<std::vector<std::vector<std::pair<NodeId, std::int64_t>>>>;

// Curator post-processing. Picks the highest copy with a nonempty top level
// and, among its level suffixes Z_r, the one with the largest released
// degree sum per node (earliest r on ties).
inline DensestOutput PeelCopies(const LevelParams& p,
                                const std::vector<std::vector<std::int64_t>>& levels,
                                const NoisyDegrees& noisy, double c,
                                double epsilon) {
  const std::int64_t n = p.n();
  const std::int64_t top = p.levels_per_group() - 1;
  std::int64_t best_group = -1;
  for (std::int64_t g = p.groups() - 1; g >= 0 && best_group < 0; --g) {
    for (std::int64_t i = 0; i < n; ++i) {
      if (levels[g][i] == top) {
        best_group = g;
        break;
      }
    }
  }
  DensestOutput out;
  std::int64_t best_r = 0;
  if (best_group < 0) {
    for (const auto& [node, value] : noisy[0][0]) out.noisy_degree_sum += value;
  } else {
    std::int64_t best_w = 0, best_size = 0;
    for (std::int64_t r = 0; r < top; ++r) {
      const auto& released = noisy[best_group][r];
      std::int64_t size = static_cast<std::int64_t>(released.size());
      if (size == 0) continue;
      std::int64_t w = 0;
      for (const auto& [node, value] : released) w += value;
      if (best_size == 0 || static_cast<__int128>(w) * best_size >
                                static_cast<__int128>(best_w) * size) {
        best_w = w;
        best_size = size;
        best_r = r;
      }
    }
    out.noisy_degree_sum = best_w;
  }
  out.group = best_group;
  out.level = best_r;
  for (std::int64_t i = 0; i < n; ++i) {
    if (best_group < 0 || levels[best_group][i] >= best_r) {
      out.nodes.push_back(static_cast<NodeId>(i));
    }
  }
  double log_n = p.LogBase();
  out.reported_density =
      Rational(out.noisy_degree_sum, 2 * static_cast<std::int64_t>(out.nodes.size())) -
      Rational::Approximate(c * log_n * log_n * log_n / epsilon);
  return out;
}

}  // namespace internal

// Nodes release noisy same-level degrees for every group copy they are
// active in; the curator peels the resulting levels.
inline LedpDensestResult LedpDensestSubgraph(const Graph& g, double epsilon,
                                             const LevelConfig& config,
                                             const RunOptions& opt = {},
                                             double c = 1.0) {
  ValidateEpsilon(epsilon);
  config.Validate();
  if (!(c >= 0) || !std::isfinite(c)) {
    throw DomainError("density correction constant must be >= 0");
  }
  const NodeId n = g.num_nodes();
  LedpDensestResult res;
  res.ledger = BudgetLedger(epsilon);
  res.transcript =
      Transcript("densest-ledp", opt.record_messages, opt.debug_nonprivate);
  if (n < 2) {
    res.output.nodes = AllNodes(g);
    return res;
  }
  LevelParams p(n, config);
  res.transcript.params() = internal::LevelParamsJson(p, epsilon);
  res.transcript.params()["c"] = c;
  internal::ChargeLevelStructure(res.ledger, p, "densest-ledp/group-degree");
  NoiseSource noise(opt.seed, opt.noiseless, opt.debug_nonprivate);
  auto run = internal::RunGroupCopies(
      g, p, internal::LevelNoiseScale(p, epsilon), Channel::kDensestDegree,
      internal::CopyRelease::kNoisyDegrees, noise, res.transcript);
  res.output = internal::PeelCopies(p, run.levels, run.noisy, c, epsilon);
  res.max_abs_noise = noise.max_abs_noise();
  return res;
}

// Recomputes the curator's answer from a recorded transcript alone.
inline DensestOutput RederiveDensest(const Transcript& t) {
  if (t.algorithm() != "densest-ledp" || !t.records_messages()) {
    throw ValidationError("transcript lacks recorded densest-ledp messages");
  }
  LevelParams p = internal::LevelParamsFromJson(t.params());
  const std::int64_t rounds = p.levels_per_group() - 1;
  std::vector<std::vector<std::int64_t>> levels(
      p.groups(), std::vector<std::int64_t>(p.n(), 0));
  internal::NoisyDegrees noisy(p.groups());
  for (auto& per_round : noisy) per_round.resize(rounds);
  for (const Round& r : t.rounds()) {
    for (const Message& m : r.messages) {
      for (std::size_t k = 0; k < m.released.size(); ++k) {
        std::int64_t c = m.slots.at(k);
        noisy.at(c).at(r.index).emplace_back(m.node, m.released[k]);
        if (static_cast<double>(m.released[k]) > p.GroupThreshold(c)) {
          levels[c].at(m.node) = r.index + 1;
        }
      }
    }
  }
  return internal::PeelCopies(p, levels, noisy, t.params().at("c").get<double>(),
                              t.params().at("epsilon").get<double>());
}

}  // namespace ledp

#endif  // LEDP_LEDP_DENSEST_HPP_
