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

#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <thread>
#include <vector>

#include "tricolor/graph.hpp"
#include "tricolor/partition.hpp"
#include "tricolor/proof.hpp"

namespace tricolor {

enum class RuleStatus { Continue, No };

struct RuleOutcome {
    RuleStatus status = RuleStatus::Continue;
    std::optional<Contradiction> contradiction;  // present iff status == No
    std::size_t inclusions = 0;
};

/// Triangle rule for set `target`.
///
/// Scans the edges {a, b} of the pool in lexicographic order. If both ends
/// neighbour a member of `target`, every pooled common neighbour c of a and b
/// is forced into `target`, unless c itself neighbours `target`, which is a
/// contradiction.
///
/// The "neighbours a member" trigger only counts members present when the
/// pass started; pool removals and the contradiction check see the live
/// state. Witnesses are the smallest qualifying labels.
inline RuleOutcome rho1(PartitionState &state, SetId target, const Graph &g, ProofLog &log)
{
    RuleOutcome out;
    const PartitionState::Stamp pass_start = state.clock();
    for (const Edge &e : g.edges()) {
        if (!state.unassigned(e.u) || !state.unassigned(e.v))
            continue;
        auto x = state.neighbor_in(g, e.u, target, pass_start);
        if (!x)
            continue;
        auto y = state.neighbor_in(g, e.v, target, pass_start);
        if (!y)
            continue;

        std::optional<Contradiction> failure;
        for_each_common_neighbor(g, e.u, e.v, [&](Vertex c) {
            if (failure || !state.unassigned(c))
                return;
            if (auto z = state.neighbor_in(g, c, target)) {
                failure = Rho1Contradiction{target, e.u, e.v, c, *x, *y, *z};
                return;
            }
            state.assign(c, target);
            log.record(Rho1Inclusion{c, target, e.u, e.v, *x, *y});
            ++out.inclusions;
        });
        if (failure) {
            log.record(*failure);
            out.status = RuleStatus::No;
            out.contradiction = std::move(failure);
            return out;
        }
    }
    return out;
}

/// Two-set rule: every pooled x (ascending) with a neighbour in `src_a` and
/// one in `src_b` is forced into `dst`, unless it also neighbours `dst`.
inline RuleOutcome rho2(PartitionState &state, SetId src_a, SetId src_b, SetId dst, const Graph &g, ProofLog &log)
{
    if (src_a == src_b || src_a == dst || src_b == dst)
        throw std::invalid_argument("rho2 needs three distinct sets");
    if (src_b < src_a)
        std::swap(src_a, src_b);

    RuleOutcome out;
    for (Vertex x = 1; x <= g.vertex_count(); ++x) {
        if (!state.unassigned(x))
            continue;
        auto a = state.neighbor_in(g, x, src_a);
        if (!a)
            continue;
        auto b = state.neighbor_in(g, x, src_b);
        if (!b)
            continue;
        if (auto c = state.neighbor_in(g, x, dst)) {
            std::array<Vertex, 3> by_set{};
            by_set[index_of(src_a)] = *a;
            by_set[index_of(src_b)] = *b;
            by_set[index_of(dst)] = *c;
            Contradiction end = Rho2Contradiction{x, by_set[0], by_set[1], by_set[2]};
            log.record(end);
            out.status = RuleStatus::No;
            out.contradiction = end;
            return out;
        }
        state.assign(x, dst);
        log.record(Rho2Inclusion{x, dst, *a, *b});
        ++out.inclusions;
    }
    return out;
}

/// The six rule invocations of one propagation round.
enum class RuleStep : std::uint8_t { Rho1A, Rho1B, Rho1C, Rho2ABtoC, Rho2ACtoB, Rho2BCtoA };

using RuleOrder = std::array<RuleStep, 6>;

inline constexpr RuleOrder kDefaultRuleOrder = {RuleStep::Rho1A,     RuleStep::Rho1B,     RuleStep::Rho1C,
                                                RuleStep::Rho2ABtoC, RuleStep::Rho2ACtoB, RuleStep::Rho2BCtoA};

inline RuleOutcome apply_rule(RuleStep step, PartitionState &state, const Graph &g, ProofLog &log)
{
    switch (step) {
    case RuleStep::Rho1A:
        return rho1(state, SetId::A, g, log);
    case RuleStep::Rho1B:
        return rho1(state, SetId::B, g, log);
    case RuleStep::Rho1C:
        return rho1(state, SetId::C, g, log);
    case RuleStep::Rho2ABtoC:
        return rho2(state, SetId::A, SetId::B, SetId::C, g, log);
    case RuleStep::Rho2ACtoB:
        return rho2(state, SetId::A, SetId::C, SetId::B, g, log);
    case RuleStep::Rho2BCtoA:
        return rho2(state, SetId::B, SetId::C, SetId::A, g, log);
    }
    throw std::invalid_argument("unknown rule step");
}

enum class Answer { No, Yes, Undetermined };

[[nodiscard]] constexpr const char *answer_name(Answer a) noexcept
{
    switch (a) {
    case Answer::No:
        return "NO";
    case Answer::Yes:
        return "YES";
    default:
        return "UNDETERMINED";
    }
}

struct SolveStats {
    std::size_t triangles_tested = 0;
    std::size_t rule_applications = 0;
    std::size_t inclusions = 0;
    std::size_t rounds = 0;

    SolveStats &operator+=(const SolveStats &o)
    {
        triangles_tested += o.triangles_tested;
        rule_applications += o.rule_applications;
        inclusions += o.inclusions;
        rounds += o.rounds;
        return *this;
    }
};

struct TriangleOptions {
    RuleOrder order = kDefaultRuleOrder;
    /// Called after every rule invocation with the resulting state.
    std::function<void(RuleStep, const PartitionState &)> after_rule;
};

struct TriangleResult {
    Answer kind = Answer::Undetermined;
    std::optional<Certificate> certificate;  // kind == No
    std::optional<Coloring> coloring;        // kind == Yes
    ProofLog log;                            // undepurated
    SolveStats stats;
};

/// Propagates from the root assignment A={t.a}, B={t.b}, C={t.c} until a
/// contradiction, an empty pool, or a round that places no vertex.
[[nodiscard]] inline TriangleResult test_triangle(const Graph &g, const Triangle &t, const TriangleOptions &options = {})
{
    if (!g.is_triangle(t.a, t.b, t.c))
        throw std::invalid_argument("root is not a triangle of the graph");

    TriangleResult result;
    result.stats.triangles_tested = 1;
    result.log = ProofLog({g.vertex_count(), g.edge_count()}, {t.a, t.b, t.c});
    PartitionState state = PartitionState::rooted(g, t);

    while (true) {
        if (state.unassigned_count() == 0) {
            result.kind = Answer::Yes;
            result.coloring = state.coloring();
            return result;
        }
        const std::size_t before = state.unassigned_count();
        ++result.stats.rounds;
        for (RuleStep step : options.order) {
            RuleOutcome outcome = apply_rule(step, state, g, result.log);
            ++result.stats.rule_applications;
            result.stats.inclusions += outcome.inclusions;
            if (options.after_rule)
                options.after_rule(step, state);
            if (outcome.status == RuleStatus::No) {
                result.kind = Answer::No;
                result.certificate = depurate(result.log);
                return result;
            }
        }
        if (state.unassigned_count() == before) {
            result.kind = Answer::Undetermined;
            return result;
        }
    }
}

struct SolveOptions {
    /// Worker threads for root triangles; the answer does not depend on it.
    unsigned jobs = 1;
    TriangleOptions triangle;
};

struct Verdict {
    Answer kind = Answer::Undetermined;
    std::optional<Certificate> certificate;  // kind == No
    std::optional<Triangle> root;            // triangle that decided, if any
    std::optional<Coloring> coloring;        // kind == Yes
    std::optional<ProofLog> log;             // undepurated log of the deciding run
    SolveStats stats;
    std::size_t triangle_count = 0;
};

namespace detail {

inline Verdict verdict_from(TriangleResult &&r, const Triangle &t)
{
    Verdict v;
    v.kind = r.kind;
    v.root = t;
    v.certificate = std::move(r.certificate);
    v.coloring = std::move(r.coloring);
    v.log = std::move(r.log);
    return v;
}

}  // namespace detail

/// Tries each triangle of `g` in lexicographic order from a fresh state and
/// adopts the first definite answer. With `jobs > 1` triangles run
/// concurrently, but the reported answer, certificate and statistics are
/// those of the sequential run.
[[nodiscard]] inline Verdict is_3_colorable(const Graph &g, const SolveOptions &options = {})
{
    const std::vector<Triangle> roots = triangles(g);

    if (options.jobs <= 1) {
        SolveStats total;
        for (const Triangle &t : roots) {
            TriangleResult r = test_triangle(g, t, options.triangle);
            total += r.stats;
            if (r.kind != Answer::Undetermined) {
                Verdict v = detail::verdict_from(std::move(r), t);
                v.stats = total;
                v.triangle_count = roots.size();
                return v;
            }
        }
        Verdict v;
        v.stats = total;
        v.triangle_count = roots.size();
        return v;
    }

    std::vector<SolveStats> stats(roots.size());
    std::vector<std::optional<TriangleResult>> decided(roots.size());
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> best{roots.size()};

    auto worker = [&] {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= roots.size() || i > best.load())
                return;
            TriangleResult r = test_triangle(g, roots[i], options.triangle);
            stats[i] = r.stats;
            if (r.kind != Answer::Undetermined) {
                decided[i] = std::move(r);
                std::size_t cur = best.load();
                while (i < cur && !best.compare_exchange_weak(cur, i)) {
                }
            }
        }
    };
    {
        std::vector<std::thread> pool;
        const unsigned n_threads = std::min<std::size_t>(options.jobs, std::max<std::size_t>(roots.size(), 1));
        for (unsigned k = 0; k < n_threads; ++k)
            pool.emplace_back(worker);
        for (std::thread &th : pool)
            th.join();
    }

    const std::size_t winner = best.load();
    SolveStats total;
    for (std::size_t i = 0; i < std::min(winner + 1, roots.size()); ++i)
        total += stats[i];
    Verdict v;
    if (winner < roots.size())
        v = detail::verdict_from(std::move(*decided[winner]), roots[winner]);
    v.stats = total;
    v.triangle_count = roots.size();
    return v;
}

}  // namespace tricolor
