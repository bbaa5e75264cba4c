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

#include <algorithm>
#include <string>

#include "test_support.hpp"
#include "tricolor/proof.hpp"
#include "tricolor/solver.hpp"
#include "tricolor/verifier.hpp"

namespace tricolor {
namespace {

TEST(ProofLog, RootOnly)
{
    ProofLog log({3, 3}, {1, 2, 3});
    EXPECT_TRUE(log.entries().empty());
    EXPECT_TRUE(log.is_root(1) && log.is_root(2) && log.is_root(3));
    EXPECT_FALSE(log.is_root(4));
    EXPECT_FALSE(log.final_statement());
}

TEST(ProofLog, KeyedByIncludedVertex)
{
    ProofLog log({19, 16}, {1, 2, 3});
    log.record(Rho1Inclusion{6, SetId::A, 4, 5, 1, 1});
    log.record(Rho2Inclusion{5, SetId::B, 6, 3});
    ASSERT_NE(log.find(5), nullptr);
    EXPECT_EQ(predecessors(*log.find(5)), (std::vector<Vertex>{6, 3}));
    EXPECT_EQ(log.position(5), 1u);
    EXPECT_EQ(log.find(4), nullptr);
}

TEST(ProofLog, RejectsForwardReference)
{
    ProofLog log({100, 3}, {1, 2, 3});
    EXPECT_THROW(log.record(Rho2Inclusion{5, SetId::B, 99, 3}), ProofError);
    EXPECT_THROW(log.record(Contradiction(Rho2Contradiction{5, 1, 2, 99})), ProofError);
}

TEST(ProofLog, RejectsDoubleInclusion)
{
    ProofLog log({10, 3}, {1, 2, 3});
    log.record(Rho2Inclusion{5, SetId::C, 1, 2});
    EXPECT_THROW(log.record(Rho2Inclusion{5, SetId::A, 2, 3}), ProofError);
    EXPECT_THROW(log.record(Rho2Inclusion{2, SetId::A, 2, 3}), ProofError);
    log.record(Contradiction(Rho2Contradiction{6, 1, 2, 5}));
    EXPECT_THROW(log.record(Rho2Inclusion{7, SetId::A, 2, 3}), ProofError);
    EXPECT_THROW(log.record(Contradiction(Rho2Contradiction{6, 1, 2, 5})), ProofError);
}

TEST(Depurate, NeedsContradiction)
{
    ProofLog log({4, 6}, {1, 2, 3});
    EXPECT_THROW((void)depurate(log), ProofError);
}

TEST(Depurate, DemoLogKeepsFourInclusions)
{
    TriangleResult r = test_triangle(testing::demo_proof_graph(), {1, 2, 3});
    ASSERT_EQ(r.kind, Answer::No);
    const Certificate &c = *r.certificate;
    ASSERT_EQ(c.steps.size(), 4u);
    EXPECT_EQ(subject(c.steps[0]), 6u);
    EXPECT_EQ(subject(c.steps[1]), 5u);
    EXPECT_EQ(subject(c.steps[2]), 18u);
    EXPECT_EQ(subject(c.steps[3]), 4u);
    EXPECT_TRUE(std::holds_alternative<Rho2Contradiction>(c.contradiction));
}

TEST(Depurate, ContradictionOnRootsOnly)
{
    TriangleResult r = test_triangle(testing::complete_graph(4), {1, 2, 3});
    ASSERT_EQ(r.kind, Answer::No);
    EXPECT_TRUE(r.certificate->steps.empty());
}

TEST(Depurate, DropsUnrelatedInclusion)
{
    // Demo graph plus vertex 20 on the root edge {1,2}: it is forced into C
    // but nothing downstream depends on it.
    const Graph demo = testing::demo_proof_graph();
    std::vector<Edge> edges(demo.edges().begin(), demo.edges().end());
    edges.emplace_back(1, 20);
    edges.emplace_back(2, 20);
    const Graph g(20, edges);

    TriangleResult r = test_triangle(g, {1, 2, 3});
    ASSERT_EQ(r.kind, Answer::No);
    ASSERT_NE(r.log.find(20), nullptr);
    for (const auto &step : r.certificate->steps)
        EXPECT_NE(subject(step), 20u);
    EXPECT_LT(r.certificate->steps.size(), r.log.entries().size());
    EXPECT_TRUE(verify(g, render_machine(*r.certificate)).valid());
    // The undepurated log is itself a checkable certificate.
    EXPECT_TRUE(verify(g, render_log(r.log)).valid());
}

TEST(Depurate, IdempotentOnRebuiltLog)
{
    for (const auto &[name, g] : testing::fuzz_corpus()) {
        Verdict v = is_3_colorable(g);
        if (v.kind != Answer::No)
            continue;
        EXPECT_EQ(depurate(log_from_certificate(*v.certificate)), *v.certificate) << name;
    }
}

TEST(Depurate, StepsAreALinearExtension)
{
    for (const auto &[name, g] : testing::fuzz_corpus()) {
        Verdict v = is_3_colorable(g);
        if (v.kind != Answer::No)
            continue;
        const Certificate &c = *v.certificate;
        std::vector<Vertex> known = {c.root.a, c.root.b, c.root.c};
        auto seen = [&](Vertex p) { return std::find(known.begin(), known.end(), p) != known.end(); };
        for (const auto &step : c.steps) {
            for (Vertex p : predecessors(step))
                EXPECT_TRUE(seen(p)) << name << ": " << machine_record(step);
            known.push_back(subject(step));
        }
        for (Vertex p : predecessors(c.contradiction))
            EXPECT_TRUE(seen(p)) << name;
        EXPECT_LE(c.steps.size() + 3, g.vertex_count()) << name;
    }
}

TEST(Render, K4Certificate)
{
    const Certificate c = *test_triangle(testing::complete_graph(4), {1, 2, 3}).certificate;
    EXPECT_EQ(render_machine(c), "g 4 6\nt 1 2 3\nn2 4 1 2 3\n");
    EXPECT_EQ(render_human(c),
              "The graph G is not 3-colorable.\n"
              "Proof: (by contradiction)\n"
              "Assume G is 3-colorable, hence it should exist the possibility of partitioning the vertices of G in "
              "three independent sets: A, B and C.\n"
              "Thus:\n"
              "Select triangle T=[1, 2, 3]\n"
              "Let A, B, C be three independent sets, each one containing a different vertex of triangle T:\n"
              "A=[1], B=[2], C=[3]\n"
              "  * Vertex 4 has an edge with at least, one vertex of set A (e[1, 4]) one of B (e[2, 4]) and one of C "
              "(e[3, 4]).\n"
              "Thus, does not exist the possibility of partitioning the vertices of G in three independent sets: A, B "
              "and C (contradiction).\n"
              "Therefore G is not 3-colorable.\n"
              "Q.E.D.\n");
}

TEST(Render, DemoHumanProof)
{
    const Certificate c = *is_3_colorable(testing::demo_proof_graph()).certificate;
    const std::string text = render_human(c);
    EXPECT_NE(text.find("Select triangle T=[1, 2, 3]"), std::string::npos);
    EXPECT_NE(text.find("  * Triangle [4, 5, 6] has edges: e[1, 4] and e[1, 5] with set A hence vertex 6 must be "
                        "assigned to set A.\n"),
              std::string::npos);
    EXPECT_NE(text.find("  * Triangle [4, 7, 18] has edges: e[1, 4] and e[6, 7] with set A hence vertex 18 must be "
                        "assigned to set A.\n"),
              std::string::npos);
    EXPECT_NE(text.find("  * Vertex 4 has an edge with one vertex of set A (e[1, 4]) and one of B (e[4, 5]) hence "
                        "vertex 4 must be assigned to set C.\n"),
              std::string::npos);
    EXPECT_NE(text.find("  * Vertex 19 has an edge with at least, one vertex of set A (e[18, 19]) one of B (e[2, 19]) "
                        "and one of C (e[4, 19]).\n"),
              std::string::npos);
    EXPECT_TRUE(text.ends_with("Therefore G is not 3-colorable.\nQ.E.D.\n"));

    const std::string machine = render_machine(c);
    EXPECT_EQ(std::count(machine.begin(), machine.end(), '\n'), 7);
}

TEST(Render, Rho1ContradictionLine)
{
    const Contradiction end = Rho1Contradiction{SetId::B, 7, 5, 6, 4, 4, 2};
    EXPECT_EQ(render_line(end), "Every vertex of triangle [5, 6, 7] is joined by an edge to an element in the set B "
                                "(e[4, 7], e[4, 5] and e[2, 6]).");
    EXPECT_EQ(machine_record(end), "n1 B 7 5 6 4 4 2");
}

}  // namespace
}  // namespace tricolor
