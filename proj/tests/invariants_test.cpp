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

#include "ledp/invariants.hpp"

#include <vector>

#include "gtest/gtest.h"
#include "ledp/core_decomposition.hpp"
#include "ledp/errors.hpp"
#include "ledp/graph.hpp"

namespace ledp {
namespace {

TEST(InvariantsTest, NoiselessRunsHaveNoViolations) {
  RunOptions opt;
  opt.noiseless = true;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Graph g = ErdosRenyi(150, 0.02 + 0.01 * static_cast<double>(seed), seed);
    LevelParams p(g.num_nodes(), LevelConfig{});
    auto res = LedpCoreDecomposition(g, 1.0, LevelConfig{}, opt);
    EXPECT_TRUE(CheckInvariantDegreeUpper(g, res.final_levels, p, 1).empty());
    EXPECT_TRUE(CheckInvariantDegreeLower(g, res.final_levels, p, 1).empty());
    // The noiseless dynamics satisfy both bounds with no slack at all.
    EXPECT_TRUE(CheckInvariantDegreeUpper(g, res.final_levels, p, 0).empty());
    EXPECT_TRUE(CheckInvariantDegreeLower(g, res.final_levels, p, 0).empty());
  }
}

TEST(InvariantsTest, NoisyRunsWithinLoggedNoise) {
  Graph g = ErdosRenyi(300, 0.03, 5);
  LevelParams p(300, LevelConfig{});
  RunOptions opt;
  opt.debug_nonprivate = true;
  opt.record_messages = false;
  opt.seed = 17;
  auto res = LedpCoreDecomposition(g, 2.0, LevelConfig{}, opt);
  double slack = static_cast<double>(res.max_abs_noise) + 1;
  EXPECT_TRUE(CheckInvariantDegreeUpper(g, res.final_levels, p, slack).empty());
  EXPECT_TRUE(CheckInvariantDegreeLower(g, res.final_levels, p, slack).empty());
}

TEST(InvariantsTest, DetectsHandBuiltViolations) {
  Graph g = CompleteGraph(5);
  LevelParams p(5, LevelConfig{});
  // Everyone on level 0: each node sees 4 neighbors against threshold 1.
  std::vector<std::int64_t> flat(5, 0);
  auto up = CheckInvariantDegreeUpper(g, flat, p, 0);
  ASSERT_EQ(up.size(), 5u);
  EXPECT_EQ(up[0].count, 4);
  EXPECT_DOUBLE_EQ(up[0].bound, 1.0);
  EXPECT_TRUE(CheckInvariantDegreeUpper(g, flat, p, 3).empty());

  // A lone node lifted to level 3 with no neighbors above level 2.
  Graph path = PathGraph(3);
  std::vector<std::int64_t> lifted{3, 0, 0};
  auto low = CheckInvariantDegreeLower(path, lifted, LevelParams(3, {}), 0);
  ASSERT_EQ(low.size(), 1u);
  EXPECT_EQ(low[0].node, 0);
  EXPECT_EQ(low[0].count, 0);
}

TEST(InvariantsTest, TopLevelIsExemptFromUpperBound) {
  Graph g = CompleteGraph(4);
  LevelParams p(4, LevelConfig{});
  std::vector<std::int64_t> top(4, p.total_levels() - 1);
  EXPECT_TRUE(CheckInvariantDegreeUpper(g, top, p, 0).empty());
}

TEST(InvariantsTest, ValidatesInput) {
  Graph g = CompleteGraph(4);
  LevelParams p(4, LevelConfig{});
  std::vector<std::int64_t> short_levels(3, 0);
  EXPECT_THROW(CheckInvariantDegreeUpper(g, short_levels, p, 1),
               ValidationError);
  std::vector<std::int64_t> out_of_range(4, p.total_levels());
  EXPECT_THROW(CheckInvariantDegreeLower(g, out_of_range, p, 1), DomainError);
}

}  // namespace
}  // namespace ledp
