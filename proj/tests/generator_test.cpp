// Copyright 2026 The tricolor Authors
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

#include <gtest/gtest.h>

#include <set>

#include "test_support.hpp"
#include "tricolor/generator.hpp"
#include "tricolor/oracle.hpp"
#include "tricolor/solver.hpp"

namespace tricolor {
namespace {

using testing::complete_graph;

TEST(SplitMix64, ReferenceSequence)
{
    SplitMix64 rng(1234567);
    EXPECT_EQ(rng.next(), 6457827717110365317ULL);
    EXPECT_EQ(rng.next(), 3203168211198807973ULL);
    EXPECT_EQ(rng.next(), 9817491932198370423ULL);
}

TEST(SplitMix64, UnitInterval)
{
    SplitMix64 rng(0);
    for (int i = 0; i < 10000; ++i) {
        const double u = rng.unit();
        ASSERT_GE(u, 0.0);
        ASSERT_LT(u, 1.0);
    }
}

TEST(Wheel, Shape)
{
    EXPECT_EQ(gen_wheel(3), complete_graph(4));
    const Graph w = gen_wheel(8);
    EXPECT_EQ(w.vertex_count(), 9u);
    EXPECT_EQ(w.edge_count(), 16u);
    EXPECT_EQ(w.degree(9), 8u);
    for (Vertex v = 1; v <= 8; ++v)
        EXPECT_EQ(w.degree(v), 3u);
    EXPECT_FALSE(oracle_3color(gen_wheel(5)).colorable);
    EXPECT_TRUE(oracle_3color(gen_wheel(6)).colorable);
    EXPECT_THROW((void)gen_wheel(2), GeneratorError);
}

TEST(Stacked, SmallCasesAreComplete)
{
    for (std::uint64_t seed : {0ULL, 1ULL, 99ULL}) {
        EXPECT_EQ(gen_stacked_triangulation(3, seed), complete_graph(3));
        EXPECT_EQ(gen_stacked_triangulation(4, seed), complete_graph(4));
    }
    EXPECT_THROW((void)gen_stacked_triangulation(2, 0), GeneratorError);
}

TEST(Stacked, EdgeCountAndDeterminism)
{
    for (std::size_t n = 3; n <= 60; n += 7) {
        const Graph g = gen_stacked_triangulation(n, n * 31);
        EXPECT_EQ(g.edge_count(), 3 * (n - 2)) << n;
        EXPECT_EQ(g, gen_stacked_triangulation(n, n * 31));
    }
    EXPECT_NE(gen_stacked_triangulation(30, 1), gen_stacked_triangulation(30, 2));
}

TEST(Stacked, TriangleCount)
{
    // Every insertion adds three triangles, K3 starts with one.
    for (std::size_t n = 4; n <= 40; n += 6) {
        const Graph g = gen_stacked_triangulation(n, 11);
        EXPECT_EQ(triangles(g).size(), 1 + 3 * (n - 3)) << n;
    }
}

TEST(Stacked, SeededInstanceIsRefuted)
{
    const Graph g = gen_stacked_triangulation(10, 42);
    EXPECT_EQ(g.edge_count(), 24u);
    EXPECT_FALSE(oracle_3color(g).colorable);
    EXPECT_EQ(is_3_colorable(g).kind, Answer::No);
}

TEST(EdgeSubgraph, Extremes)
{
    const Graph g = gen_stacked_triangulation(15, 8);
    EXPECT_EQ(gen_edge_subgraph(g, 1.0, 3), g);
    const Graph empty = gen_edge_subgraph(g, 0.0, 3);
    EXPECT_EQ(empty.vertex_count(), 15u);
    EXPECT_EQ(empty.edge_count(), 0u);
    EXPECT_THROW((void)gen_edge_subgraph(g, 1.5, 0), GeneratorError);
    EXPECT_THROW((void)gen_edge_subgraph(g, -0.1, 0), GeneratorError);
}

TEST(EdgeSubgraph, KeepsASubsetDeterministically)
{
    const Graph g = gen_stacked_triangulation(20, 21);
    const Graph h = gen_edge_subgraph(g, 0.5, 7);
    EXPECT_EQ(h, gen_edge_subgraph(g, 0.5, 7));
    for (const Edge &e : h.edges())
        EXPECT_TRUE(g.adjacent(e.u, e.v));
    EXPECT_LT(h.edge_count(), g.edge_count());
    EXPECT_GT(h.edge_count(), 0u);
}

TEST(EdgeSubgraph, PinnedDraw)
{
    const Graph h = gen_edge_subgraph(complete_graph(4), 0.5, 7);
    const std::vector<Edge> kept(h.edges().begin(), h.edges().end());
    EXPECT_EQ(kept, (std::vector<Edge>{{1, 2}, {1, 3}, {2, 4}, {3, 4}}));
}

}  // namespace
}  // namespace tricolor
