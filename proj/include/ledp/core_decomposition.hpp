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

#ifndef LEDP_CORE_DECOMPOSITION_HPP_
#define LEDP_CORE_DECOMPOSITION_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "ledp/errors.hpp"
#include "ledp/graph.hpp"
#include "ledp/ledger.hpp"
#include "ledp/level_params.hpp"
#include "ledp/noise.hpp"
#include "ledp/options.hpp"
#include "ledp/oracles.hpp"
#include "ledp/transcript.hpp"

namespace ledp {

struct CoreDecompositionResult {
  std::vector<std::int64_t> final_levels;
  CoreEstimates estimates;
  std::vector<NodeId> ordering;
  Transcript transcript;
  BudgetLedger ledger{1.0};
  // Largest |noise| drawn; only tracked in debug-nonprivate runs.
  std::int64_t max_abs_noise = 0;
};

struct FastCoreResult {
  // final_levels[g][i]: level of node i in group copy g.
  std::vector<std::vector<std::int64_t>> final_levels;
  CoreEstimates estimates;
  Transcript transcript;
  BudgetLedger ledger{1.0};
  std::int64_t max_abs_noise = 0;
};

// (2+lambda)(1+psi)^{max(floor((L+1)/d) - 1, 0)} where d is the group size,
// or 4 ceil(log n) under strict_estimate.
inline CoreEstimates EstimateCoreNumbers(std::span<const std::int64_t> levels,
                                         const LevelParams& p) {
  const std::int64_t divisor = p.config().strict_estimate
                                   ? 4 * p.log_n()
                                   : p.levels_per_group();
  CoreEstimates out(levels.size());
  for (std::size_t i = 0; i < levels.size(); ++i) {
    if (levels[i] < 0 || levels[i] >= p.total_levels()) {
      throw DomainError("level out of range");
    }
    std::int64_t e = std::max<std::int64_t>((levels[i] + 1) / divisor - 1, 0);
    out[i] = (2 + p.lambda()) * std::pow(1 + p.psi(), static_cast<double>(e));
  }
  return out;
}

// (2+lambda)(1+psi)^{g'} with g' the highest copy whose top level node i
// reached, or 0.
inline CoreEstimates EstimateSmallRoundsCoreNumbers(
    const std::vector<std::vector<std::int64_t>>& levels, const LevelParams& p) {
  const std::int64_t top = p.levels_per_group() - 1;
  const std::size_t n = levels.empty() ? 0 : levels[0].size();
  CoreEstimates out(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::int64_t best = 0;
    for (std::int64_t g = p.groups() - 1; g >= 0; --g) {
      if (levels[g][i] == top) {
        best = g;
        break;
      }
    }
    out[i] = (2 + p.lambda()) * std::pow(1 + p.psi(), static_cast<double>(best));
  }
  return out;
}

// Nodes by final level, ties by index.
inline std::vector<NodeId> OrderByLevel(std::span<const std::int64_t> levels) {
  std::vector<NodeId> order(levels.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
    return levels[a] < levels[b];
  });
  return order;
}

namespace internal {

inline nlohmann::json LevelParamsJson(const LevelParams& p, double epsilon) {
  return {{"n", p.n()},
          {"epsilon", epsilon},
          {"psi", p.psi()},
          {"lambda", p.lambda()},
          {"eta", p.config().eta},
          {"strict_estimate", p.config().strict_estimate},
          {"log_n", p.log_n()},
          {"levels_per_group", p.levels_per_group()},
          {"groups", p.groups()},
          {"total_levels", p.total_levels()}};
}

inline LevelParams LevelParamsFromJson(const nlohmann::json& j) {
  LevelConfig c;
  c.psi = j.at("psi").get<double>();
  c.lambda = j.at("lambda").get<double>();
  c.eta = j.at("eta").get<double>();
  c.strict_estimate = j.at("strict_estimate").get<bool>();
  return LevelParams(j.at("n").get<std::int64_t>(), c);
}

// Noise scale eps / (8 L^2) shared by every level-structure algorithm.
inline double LevelNoiseScale(const LevelParams& p, double epsilon) {
  return epsilon / (8.0 * static_cast<double>(p.log_n() * p.log_n()));
}

// Each of the 4L^2 rounds touches an edge through both endpoints' counts.
inline void ChargeLevelStructure(BudgetLedger& ledger, const LevelParams& p,
                                 const std::string& label) {
  ledger.Charge(label, BigRational(1, 8 * p.log_n() * p.log_n()),
                p.total_levels(), 2);
}

inline Message MakeMessage(bool record, NodeId node, std::int64_t bits,
                           std::vector<std::int64_t> released,
                           std::vector<std::int64_t> slots,
                           std::vector<std::int64_t> value,
                           std::vector<std::int64_t> noise) {
  Message m;
  m.node = node;
  m.bits = bits;
  if (record) {
    m.released = std::move(released);
    m.slots = std::move(slots);
    m.true_value = std::move(value);
    m.noise = std::move(noise);
  }
  return m;
}

enum class CopyRelease { kBits, kNoisyDegrees };

struct GroupCopiesRun {
  std::vector<std::vector<std::int64_t>> levels;  // [g][i]
  // noisy[g][r]: (node, released count) for copy g at round r.
  std::vector<std::vector<std::vector<std::pair<NodeId, std::int64_t>>>> noisy;
};

// All 2L copies advance together; copy g uses the fixed threshold
// (1+psi)^g over levels_per_group levels.
inline GroupCopiesRun RunGroupCopies(const Graph& g, const LevelParams& p,
                                     double b, Channel channel,
                                     CopyRelease mode, NoiseSource& noise,
                                     Transcript& transcript) {
  const NodeId n = g.num_nodes();
  const std::int64_t groups = p.groups();
  const std::int64_t rounds = p.levels_per_group() - 1;
  const bool record = transcript.records_messages();
  GroupCopiesRun run;
  run.levels.assign(groups, std::vector<std::int64_t>(n, 0));
  if (mode == CopyRelease::kNoisyDegrees) {
    run.noisy.assign(groups, {});
    for (auto& per_round : run.noisy) per_round.resize(rounds);
  }
  std::vector<std::vector<std::int64_t>> up(groups,
                                            std::vector<std::int64_t>(n));
  for (std::int64_t c = 0; c < groups; ++c) {
    for (NodeId v = 0; v < n; ++v) up[c][v] = g.degree(v);
  }
  std::vector<std::vector<char>> moved(groups, std::vector<char>(n, 0));
  for (std::int64_t r = 0; r < rounds; ++r) {
    transcript.BeginRound(
        r, mode == CopyRelease::kBits ? "group-bits" : "group-noisy-degree", b);
    for (NodeId i = 0; i < n; ++i) {
      std::vector<std::int64_t> released, slots, values, noises;
      std::int64_t bits = 0;
      if (mode == CopyRelease::kBits) released.assign(groups, 0);
      for (std::int64_t c = 0; c < groups; ++c) {
        if (run.levels[c][i] != r) continue;
        std::int64_t u = up[c][i];
        std::int64_t x = noise.Draw(b, {static_cast<std::uint64_t>(r),
                                        static_cast<std::uint64_t>(i), channel,
                                        static_cast<std::uint64_t>(c)});
        std::int64_t noisy = u + x;
        moved[c][i] = static_cast<double>(noisy) > p.GroupThreshold(c);
        if (record) {
          values.push_back(u);
          noises.push_back(x);
        }
        if (mode == CopyRelease::kBits) {
          released[c] = moved[c][i];
        } else {
          run.noisy[c][r].emplace_back(i, noisy);
          bits += SignedBitWidth(noisy);
          if (record) {
            released.push_back(noisy);
            slots.push_back(c);
          }
        }
      }
      if (mode == CopyRelease::kBits) {
        transcript.AddMessage(MakeMessage(record, i, groups,
                                          std::move(released), {},
                                          std::move(values),
                                          std::move(noises)));
      } else if (bits > 0) {
        transcript.AddMessage(MakeMessage(record, i, bits, std::move(released),
                                          std::move(slots), std::move(values),
                                          std::move(noises)));
      }
    }
    for (std::int64_t c = 0; c < groups; ++c) {
      for (NodeId i = 0; i < n; ++i) {
        if (run.levels[c][i] != r) continue;
        if (moved[c][i]) {
          run.levels[c][i] = r + 1;
        } else {
          for (NodeId j : g.neighbors(i)) --up[c][j];
        }
      }
    }
  }
  return run;
}

}  // namespace internal

// Level-by-level decomposition: in round r every node on level r releases
// one bit saying whether its noisy count of neighbors on level r exceeds
// (1+psi)^{F(r)}, and moves up if so.
inline CoreDecompositionResult LedpCoreDecomposition(
    const Graph& g, double epsilon, const LevelConfig& config,
    const RunOptions& opt = {}) {
  ValidateEpsilon(epsilon);
  config.Validate();
  const NodeId n = g.num_nodes();
  CoreDecompositionResult res;
  res.ledger = BudgetLedger(epsilon);
  res.transcript =
      Transcript("core-ledp", opt.record_messages, opt.debug_nonprivate);
  if (n < 2) {
    res.final_levels.assign(n, 0);
    res.estimates.assign(n, 0.0);
    res.ordering = OrderByLevel(res.final_levels);
    return res;
  }
  LevelParams p(n, config);
  res.transcript.params() = internal::LevelParamsJson(p, epsilon);
  internal::ChargeLevelStructure(res.ledger, p, "core-ledp/level-count");

  NoiseSource noise(opt.seed, opt.noiseless, opt.debug_nonprivate);
  const double b = internal::LevelNoiseScale(p, epsilon);
  const bool record = opt.record_messages;
  std::vector<std::int64_t>& level = res.final_levels;
  level.assign(n, 0);
  std::vector<std::int64_t> up(n);
  for (NodeId v = 0; v < n; ++v) up[v] = g.degree(v);
  std::vector<NodeId> active(n), movers, stayers;
  std::iota(active.begin(), active.end(), 0);

  for (std::int64_t r = 0; r + 1 < p.total_levels(); ++r) {
    res.transcript.BeginRound(r, "level-count", b);
    const double threshold = p.LevelThreshold(r);
    movers.clear();
    stayers.clear();
    for (NodeId i : active) {
      std::int64_t u = up[i];
      std::int64_t x = noise.Draw(b, {static_cast<std::uint64_t>(r),
                                      static_cast<std::uint64_t>(i),
                                      Channel::kCoreCount, 0});
      bool move = static_cast<double>(u + x) > threshold;
      (move ? movers : stayers).push_back(i);
      res.transcript.AddMessage(
          internal::MakeMessage(record, i, 1, {move ? 1 : 0}, {}, {u}, {x}));
    }
    for (NodeId i : stayers) {
      for (NodeId j : g.neighbors(i)) --up[j];
    }
    for (NodeId i : movers) level[i] = r + 1;
    active.swap(movers);
  }
  res.estimates = EstimateCoreNumbers(level, p);
  res.ordering = OrderByLevel(level);
  res.max_abs_noise = noise.max_abs_noise();
  return res;
}

// Small-rounds variant: all group copies run at once and each node releases
// one bit per copy per round.
inline FastCoreResult LedpCoreDecompositionFast(const Graph& g, double epsilon,
                                                const LevelConfig& config,
                                                const RunOptions& opt = {}) {
  ValidateEpsilon(epsilon);
  config.Validate();
  const NodeId n = g.num_nodes();
  FastCoreResult res;
  res.ledger = BudgetLedger(epsilon);
  res.transcript =
      Transcript("core-ledp-fast", opt.record_messages, opt.debug_nonprivate);
  if (n < 2) {
    res.estimates.assign(n, 0.0);
    return res;
  }
  LevelParams p(n, config);
  res.transcript.params() = internal::LevelParamsJson(p, epsilon);
  internal::ChargeLevelStructure(res.ledger, p, "core-ledp-fast/group-count");
  NoiseSource noise(opt.seed, opt.noiseless, opt.debug_nonprivate);
  auto run = internal::RunGroupCopies(
      g, p, internal::LevelNoiseScale(p, epsilon), Channel::kFastCount,
      internal::CopyRelease::kBits, noise, res.transcript);
  res.final_levels = std::move(run.levels);
  res.estimates = EstimateSmallRoundsCoreNumbers(res.final_levels, p);
  res.max_abs_noise = noise.max_abs_noise();
  return res;
}

struct RederivedCore {
  std::vector<std::int64_t> final_levels;
  CoreEstimates estimates;
  std::vector<NodeId> ordering;
};

// Replays a recorded level-by-level transcript. Uses nothing but the
// transcript.
inline RederivedCore RederiveCoreDecomposition(const Transcript& t) {
  if (t.algorithm() != "core-ledp" || !t.records_messages()) {
    throw ValidationError("transcript lacks recorded core-ledp messages");
  }
  LevelParams p = internal::LevelParamsFromJson(t.params());
  RederivedCore out;
  out.final_levels.assign(p.n(), 0);
  for (const Round& r : t.rounds()) {
    for (const Message& m : r.messages) {
      if (m.released.at(0) == 1) out.final_levels.at(m.node) = r.index + 1;
    }
  }
  out.estimates = EstimateCoreNumbers(out.final_levels, p);
  out.ordering = OrderByLevel(out.final_levels);
  return out;
}

inline CoreEstimates RederiveFastEstimates(const Transcript& t) {
  if (t.algorithm() != "core-ledp-fast" || !t.records_messages()) {
    throw ValidationError("transcript lacks recorded core-ledp-fast messages");
  }
  LevelParams p = internal::LevelParamsFromJson(t.params());
  std::vector<std::vector<std::int64_t>> levels(
      p.groups(), std::vector<std::int64_t>(p.n(), 0));
  for (const Round& r : t.rounds()) {
    for (const Message& m : r.messages) {
      for (std::int64_t c = 0; c < p.groups(); ++c) {
        if (m.released.at(c) == 1) levels[c].at(m.node) = r.index + 1;
      }
    }
  }
  return EstimateSmallRoundsCoreNumbers(levels, p);
}

}  // namespace ledp

#endif  // LEDP_CORE_DECOMPOSITION_HPP_
