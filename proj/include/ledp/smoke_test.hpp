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

#ifndef LEDP_SMOKE_TEST_HPP_
#define LEDP_SMOKE_TEST_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ledp/core_decomposition.hpp"
#include "ledp/errors.hpp"
#include "ledp/graph.hpp"
#include "ledp/rng.hpp"

namespace ledp {

inline constexpr std::int64_t kSmokeTestMinTrials = 100000;

struct SmokeOutcome {
  std::int64_t count_g = 0;        // on the path 0-1-2
  std::int64_t count_g_prime = 0;  // on the triangle
};

struct SmokeTestReport {
  std::string algorithm;
  double epsilon = 0;
  std::int64_t trials = 0;
  std::int64_t min_support = 0;
  // Largest empirical probability ratio, in either direction, over outcomes
  // whose combined count reaches min_support.
  double max_ratio = 1;
  double bound = 0;  // e^epsilon * 1.25
  bool flagged = false;
  std::int64_t outcomes_considered = 0;
  std::map<std::string, SmokeOutcome> histogram;
};

namespace internal {

// Sorted multiset of min(value, 3), as a short key.
inline std::string ProjectLevels(std::vector<std::int64_t> v) {
  for (auto& x : v) x = std::min<std::int64_t>(x, 3);
  std::sort(v.begin(), v.end());
  std::string key;
  for (auto x : v) key += static_cast<char>('0' + x);
  return key;
}

inline std::string SmokeOutcomeKey(const std::string& algorithm,
                                   const Graph& g, double epsilon,
                                   std::uint64_t seed) {
  LevelConfig config;
  RunOptions opt;
  opt.seed = seed;
  opt.record_messages = false;
  if (algorithm == "core-ledp") {
    return ProjectLevels(LedpCoreDecomposition(g, epsilon, config, opt).final_levels);
  }
  if (algorithm == "core-ledp-fast") {
    auto r = LedpCoreDecompositionFast(g, epsilon, config, opt);
    LevelParams p(g.num_nodes(), config);
    std::vector<std::int64_t> top(g.num_nodes(), 0);
    for (NodeId i = 0; i < g.num_nodes(); ++i) {
      for (std::int64_t c = p.groups() - 1; c >= 0; --c) {
        if (r.final_levels[c][i] == p.levels_per_group() - 1) {
          top[i] = c;
          break;
        }
      }
    }
    return ProjectLevels(top);
  }
  throw DomainError("smoke test supports core-ledp and core-ledp-fast");
}

}  // namespace internal

// Runs `algorithm` on the path 0-1-2 and on the triangle, which differ in
// the edge {0, 2}, and compares the empirical distributions of a projected
// output.
inline SmokeTestReport DpSmokeTest(const std::string& algorithm,
                                   double epsilon, std::int64_t trials,
                                   std::uint64_t seed, bool noiseless = false,
                                   std::int64_t min_support = 200) {
  if (noiseless) {
    throw DomainError("smoke test refuses noiseless runs: they are not private");
  }
  if (trials < kSmokeTestMinTrials) {
    throw DomainError("smoke test needs at least " +
                      std::to_string(kSmokeTestMinTrials) + " trials");
  }
  ValidateEpsilon(epsilon);
  const Graph g = PathGraph(3);
  const Graph g_prime = g.WithEdge(0, 2);
  SmokeTestReport rep;
  rep.algorithm = algorithm;
  rep.epsilon = epsilon;
  rep.trials = trials;
  rep.min_support = min_support;
  rep.bound = std::exp(epsilon) * 1.25;
  for (std::int64_t t = 0; t < trials; ++t) {
    std::uint64_t s0 = HashCombine(seed, 2 * static_cast<std::uint64_t>(t));
    std::uint64_t s1 = HashCombine(seed, 2 * static_cast<std::uint64_t>(t) + 1);
    ++rep.histogram[internal::SmokeOutcomeKey(algorithm, g, epsilon, s0)].count_g;
    ++rep.histogram[internal::SmokeOutcomeKey(algorithm, g_prime, epsilon, s1)]
          .count_g_prime;
  }
  for (const auto& [key, o] : rep.histogram) {
    if (o.count_g + o.count_g_prime < min_support) continue;
    ++rep.outcomes_considered;
    double ratio;
    if (o.count_g == 0 || o.count_g_prime == 0) {
      ratio = INFINITY;
    } else {
      double a = static_cast<double>(o.count_g);
      double b = static_cast<double>(o.count_g_prime);
      ratio = std::max(a / b, b / a);
    }
    rep.max_ratio = std::max(rep.max_ratio, ratio);
  }
  rep.flagged = rep.max_ratio > rep.bound;
  return rep;
}

}  // namespace ledp

#endif  // LEDP_SMOKE_TEST_HPP_
