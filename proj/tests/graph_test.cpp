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

#include "ledp/graph.hpp"

#include <sstream>
#include <vector>

#include "gtest/gtest.h"
#include "ledp/errors.hpp"

namespace ledp {
namespace {

TEST(LoadEdgeListTest, Triangle) {
  Graph g = LoadEdgeList("0 1\n1 2\n0 2");
  EXPECT_EQ(g.num_nodes(), 3);
  EXPECT_EQ(g.num_edges(), 3);
}

TEST(LoadEdgeListTest, DuplicatesCollapse) {
  Graph g = LoadEdgeList("0 1\n0 1");
  EXPECT_EQ(g.num_nodes(), 2);
  EXPECT_EQ(g.num_edges(), 1);
  Graph h = LoadEdgeList("0 1\n1 0\n");
  EXPECT_EQ(h.num_edges(), 1);
}

TEST(LoadEdgeListTest, SelfLoopRejected) {
  EXPECT_THROW(LoadEdgeList("0 0"), ValidationError);
}

TEST(LoadEdgeListTest, CommentsAndBlankLines) {
  Graph g = LoadEdgeList("# header\n\n0 1  # trailing\n   \n2 1\n");
  EXPECT_EQ(g.num_nodes(), 3);
  EXPECT_EQ(g.num_edges(), 2);
}

TEST(LoadEdgeListTest, MalformedLineReportsLineNumber) {
  try {
    LoadEdgeList("0 1\n1 x\n");
    FAIL() << "expected MalformedInputError";
  } catch (const MalformedInputError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
  EXPECT_THROW(LoadEdgeList("0 1 2\n"), MalformedInputError);
  EXPECT_THROW(LoadEdgeList("-1 2\n"), MalformedInputError);
  EXPECT_THROW(LoadEdgeList("5\n"), MalformedInputError);
}

TEST(LoadEdgeListTest, GapsBecomeIsolatedNodes) {
  Graph g = LoadEdgeList("0 4\n");
  EXPECT_EQ(g.num_nodes(), 5);
  EXPECT_EQ(g.degree(2), 0);
}

TEST(LoadEdgeListTest, RemappingAssignsDenseIds) {
  std::istringstream in("100 7\n7 42\n# x\n42 100\n");
  RemappedGraph r = LoadEdgeListRemapped(in);
  EXPECT_EQ(r.graph.num_nodes(), 3);
  EXPECT_EQ(r.graph.num_edges(), 3);
  EXPECT_EQ(r.original_ids, (std::vector<std::int64_t>{100, 7, 42}));
}

TEST(GraphTest, AdjacencyIsSortedAndSymmetric) {
  Graph g = ErdosRenyi(60, 0.2, 5);
  std::int64_t total = 0;
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    auto nb = g.neighbors(v);
    total += static_cast<std::int64_t>(nb.size());
    for (std::size_t k = 0; k < nb.size(); ++k) {
      if (k > 0) {
        EXPECT_LT(nb[k - 1], nb[k]);
      }
      EXPECT_NE(nb[k], v);
      EXPECT_TRUE(g.HasEdge(nb[k], v));
      const Edge& e = g.edges()[g.incident_edges(v)[k]];
      EXPECT_TRUE((e.u == v && e.v == nb[k]) || (e.v == v && e.u == nb[k]));
    }
  }
  EXPECT_EQ(total, 2 * g.num_edges());
}

TEST(GraphTest, FromEdgesValidatesIds) {
  EXPECT_THROW(Graph::FromEdges(2, {{0, 2}}), ValidationError);
  EXPECT_THROW(Graph::FromEdges(2, {{1, 1}}), ValidationError);
}

TEST(GraphTest, WithEdgeAddsOneEdge) {
  Graph g = PathGraph(3);
  Graph h = g.WithEdge(0, 2);
  EXPECT_EQ(h.num_edges(), 3);
  EXPECT_FALSE(g.HasEdge(0, 2));
  EXPECT_TRUE(h.HasEdge(2, 0));
}

TEST(InducedDensityTest, K4All) {
  Graph g = CompleteGraph(4);
  Density d = InducedDensity(g, AllNodes(g));
  EXPECT_EQ(d.value(), Rational(3, 2));
  EXPECT_EQ(d.edges, 6);
  EXPECT_EQ(d.nodes, 4);
}

TEST(InducedDensityTest, SingletonIsZero) {
  Graph g = CompleteGraph(5);
  std::vector<NodeId> s{3};
  EXPECT_EQ(InducedDensity(g, s).value(), Rational(0));
}

TEST(InducedDensityTest, C5IsOne) {
  Graph g = CycleGraph(5);
  EXPECT_EQ(InducedDensity(g, AllNodes(g)).value(), Rational(1));
}

TEST(InducedDensityTest, EmptySetThrows) {
  Graph g = CompleteGraph(3);
  EXPECT_THROW(InducedDensity(g, {}), DomainError);
  std::vector<NodeId> bad{7};
  EXPECT_THROW(InducedDensity(g, bad), DomainError);
}

TEST(InducedDensityTest, DuplicatesCountOnce) {
  Graph g = CompleteGraph(3);
  std::vector<NodeId> s{0, 1, 1};
  EXPECT_EQ(InducedDensity(g, s).value(), Rational(1, 2));
}

TEST(GeneratorsTest, Shapes) {
  EXPECT_EQ(CompleteGraph(5).num_edges(), 10);
  EXPECT_EQ(CycleGraph(6).num_edges(), 6);
  EXPECT_EQ(PathGraph(4).num_edges(), 3);
  EXPECT_EQ(StarGraph(5).num_edges(), 5);
  EXPECT_EQ(StarGraph(5).degree(0), 5);
  EXPECT_EQ(EmptyGraph(4).num_edges(), 0);
  EXPECT_EQ(K4PlusPendant().num_edges(), 7);
  // K3 plus a ternary tree of depth 2: 3 + 1 + 3 + 9 nodes.
  Graph ct = CliquePlusTree(3, 2);
  EXPECT_EQ(ct.num_nodes(), 16);
  EXPECT_EQ(ct.num_edges(), 3 + 12);
}

TEST(GeneratorsTest, ErdosRenyiIsDeterministic) {
  Graph a = ErdosRenyi(50, 0.1, 9);
  Graph b = ErdosRenyi(50, 0.1, 9);
  EXPECT_EQ(a.edges(), b.edges());
  EXPECT_EQ(ErdosRenyi(20, 1.0, 1).num_edges(), 190);
  EXPECT_EQ(ErdosRenyi(20, 0.0, 1).num_edges(), 0);
}

TEST(RationalTest, ArithmeticAndOrder) {
  EXPECT_EQ(Rational(2, 4), Rational(1, 2));
  EXPECT_EQ(Rational(1, -2), Rational(-1, 2));
  EXPECT_EQ(Rational(1, 3) + Rational(1, 6), Rational(1, 2));
  EXPECT_EQ(Rational(1, 3) - Rational(1, 2), Rational(-1, 6));
  EXPECT_EQ(Rational(2, 3) * Rational(3, 4), Rational(1, 2));
  EXPECT_EQ(Rational(1, 2) / Rational(1, 4), Rational(2));
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_GT(Rational(-1, 3), Rational(-1, 2));
  EXPECT_EQ(Rational::Approximate(0.25), Rational(1, 4));
  EXPECT_THROW(Rational(1, 0), DomainError);
}

}  // namespace
}  // namespace ledp
