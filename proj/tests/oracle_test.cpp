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

#include "test_support.hpp"
#include "tricolor/generator.hpp"
#include "tricolor/oracle.hpp"

namespace tricolor {
namespace {

using testing::complete_graph;

TEST(Oracle, TriangleGetsCanonicalWitness)
{
    const OracleAnswer a = oracle_3color(complete_graph(3));
    ASSERT_TRUE(a.colorable);
    ASSERT_TRUE(a.witness);
    EXPECT_EQ((*a.witness)[1], SetId::A);
    EXPECT_EQ((*a.witness)[2], SetId::B);
    EXPECT_EQ((*a.witness)[3], SetId::C);
}

TEST(Oracle, SmallKnownAnswers)
{
    EXPECT_FALSE(oracle_3color(complete_graph(4)).colorable);
    EXPECT_FALSE(oracle_3color(complete_graph(4)).witness);
    EXPECT_FALSE(oracle_3color(testing::demo_proof_graph()).colorable);
    EXPECT_FALSE(oracle_3color(testing::grotzsch_graph()).colorable);
    EXPECT_TRUE(oracle_3color(Graph(0, {})).colorable);
    EXPECT_TRUE(oracle_3color(Graph(5, {})).colorable);
    EXPECT_TRUE(oracle_3color(testing::cycle_graph(7)).colorable);
    EXPECT_TRUE(oracle_3color(gen_wheel(6)).colorable);
    EXPECT_FALSE(oracle_3color(gen_wheel(5)).colorable);
}

TEST(Oracle, AgreesWithEnumeration)
{
    std::size_t checked = 0;
    for (const auto &[name, g] : testing::fuzz_corpus()) {
        if (g.vertex_count() > 10)
            continue;
        const OracleAnswer a = oracle_3color(g);
        ASSERT_EQ(a.colorable, testing::enumerate_3colorable(g)) << name;
        if (a.colorable) {
            ASSERT_TRUE(a.witness->is_proper(g)) << name;
        }
        ++checked;
    }
    EXPECT_GT(checked, 100u);
}

TEST(Oracle, CapIsEnforced)
{
    const Graph g = gen_stacked_triangulation(40, 3);
    EXPECT_THROW((void)oracle_3color(g), OracleCapExceeded);
    EXPECT_FALSE(oracle_3color(g, 40).colorable);
    EXPECT_NO_THROW((void)oracle_3color(complete_graph(32)));
}

TEST(Oracle, Deterministic)
{
    const Graph g = gen_edge_subgraph(gen_stacked_triangulation(18, 77), 0.7, 5);
    const OracleAnswer a = oracle_3color(g);
    const OracleAnswer b = oracle_3color(g);
    EXPECT_EQ(a.colorable, b.colorable);
    if (a.colorable) {
        EXPECT_EQ(*a.witness, *b.witness);
    }
}

}  // namespace
}  // namespace tricolor
