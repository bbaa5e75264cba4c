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
#include <cstddef>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

#include "tricolor/graph.hpp"
#include "tricolor/partition.hpp"

namespace tricolor {

// Inference statements. Field names follow the machine record layout:
//   i1 <c> <SET> <a> <b> <x> <y>
//   i2 <x> <SET> <a> <b>
//   n1 <SET> <a> <b> <c> <x> <y> <z>
//   n2 <x> <a> <b> <c>

struct RootTriangle {
    Vertex a = 0;
    Vertex b = 0;
    Vertex c = 0;

    friend bool operator==(const RootTriangle &, const RootTriangle &) = default;
};

/// {a, b, c} is a triangle, a-x and b-y are edges with x, y in `target`,
/// so c is forced into `target`.
struct Rho1Inclusion {
    Vertex c = 0;
    SetId target = SetId::A;
    Vertex a = 0;
    Vertex b = 0;
    Vertex x = 0;
    Vertex y = 0;

    friend bool operator==(const Rho1Inclusion &, const Rho1Inclusion &) = default;
};

/// x neighbours a and b, which lie in the two sets other than `dst`, so x is
/// forced into `dst`. The solver always cites `a` from the lower-named set.
struct Rho2Inclusion {
    Vertex x = 0;
    SetId dst = SetId::A;
    Vertex a = 0;
    Vertex b = 0;

    friend bool operator==(const Rho2Inclusion &, const Rho2Inclusion &) = default;
};

/// Every vertex of triangle {a, b, c} neighbours `target` (via x, y, z).
struct Rho1Contradiction {
    SetId target = SetId::A;
    Vertex a = 0;
    Vertex b = 0;
    Vertex c = 0;
    Vertex x = 0;
    Vertex y = 0;
    Vertex z = 0;

    friend bool operator==(const Rho1Contradiction &, const Rho1Contradiction &) = default;
};

/// x neighbours a in A, b in B and c in C.
struct Rho2Contradiction {
    Vertex x = 0;
    Vertex a = 0;
    Vertex b = 0;
    Vertex c = 0;

    friend bool operator==(const Rho2Contradiction &, const Rho2Contradiction &) = default;
};

using Inclusion = std::variant<Rho1Inclusion, Rho2Inclusion>;
using Contradiction = std::variant<Rho1Contradiction, Rho2Contradiction>;

/// Vertex moved into a set by an inclusion.
[[nodiscard]] inline Vertex subject(const Inclusion &step)
{
    return std::visit(
        [](const auto &s) -> Vertex {
            if constexpr (std::is_same_v<std::decay_t<decltype(s)>, Rho1Inclusion>)
                return s.c;
            else
                return s.x;
        },
        step);
}

[[nodiscard]] inline SetId destination(const Inclusion &step)
{
    return std::visit(
        [](const auto &s) -> SetId {
            if constexpr (std::is_same_v<std::decay_t<decltype(s)>, Rho1Inclusion>)
                return s.target;
            else
                return s.dst;
        },
        step);
}

/// Set members the statement relies on.
[[nodiscard]] inline std::vector<Vertex> predecessors(const Inclusion &step)
{
    if (const auto *r1 = std::get_if<Rho1Inclusion>(&step))
        return {r1->x, r1->y};
    const auto &r2 = std::get<Rho2Inclusion>(step);
    return {r2.a, r2.b};
}

[[nodiscard]] inline std::vector<Vertex> predecessors(const Contradiction &end)
{
    if (const auto *r1 = std::get_if<Rho1Contradiction>(&end))
        return {r1->x, r1->y, r1->z};
    const auto &r2 = std::get<Rho2Contradiction>(end);
    return {r2.a, r2.b, r2.c};
}

/// Vertex count and edge count of the graph a proof refers to.
struct GraphBinding {
    std::size_t n = 0;
    std::size_t m = 0;

    friend bool operator==(const GraphBinding &, const GraphBinding &) = default;
};

class ProofError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Append-only record of one root-triangle run, keyed by included vertex.
class ProofLog {
public:
    ProofLog() = default;
    ProofLog(GraphBinding binding, RootTriangle root) : binding_(binding), root_(root) {}

    /// Appends an inclusion. Throws ProofError if the vertex was already
    /// included or a predecessor has not been introduced yet.
    void record(const Inclusion &step)
    {
        if (final_)
            throw ProofError("inclusion recorded after the contradiction");
        const Vertex v = subject(step);
        if (is_root(v) || index_.contains(v))
            throw ProofError("vertex " + std::to_string(v) + " included twice");
        require_known(predecessors(step));
        index_.emplace(v, entries_.size());
        entries_.push_back(step);
    }

    void record(const Contradiction &end)
    {
        if (final_)
            throw ProofError("second contradiction recorded");
        require_known(predecessors(end));
        final_ = end;
    }

    [[nodiscard]] const GraphBinding &binding() const noexcept { return binding_; }
    [[nodiscard]] const RootTriangle &root() const noexcept { return root_; }

    /// Inclusions in chronological order.
    [[nodiscard]] const std::vector<Inclusion> &entries() const noexcept { return entries_; }

    [[nodiscard]] const Inclusion *find(Vertex v) const
    {
        auto it = index_.find(v);
        return it == index_.end() ? nullptr : &entries_[it->second];
    }

    [[nodiscard]] std::optional<std::size_t> position(Vertex v) const
    {
        auto it = index_.find(v);
        if (it == index_.end())
            return std::nullopt;
        return it->second;
    }

    [[nodiscard]] const std::optional<Contradiction> &final_statement() const noexcept { return final_; }

    [[nodiscard]] bool is_root(Vertex v) const noexcept { return v == root_.a || v == root_.b || v == root_.c; }

private:
    void require_known(const std::vector<Vertex> &cited) const
    {
        for (Vertex p : cited) {
            if (!is_root(p) && !index_.contains(p))
                throw ProofError("statement cites vertex " + std::to_string(p) + " before its inclusion");
        }
    }

    GraphBinding binding_;
    RootTriangle root_;
    std::vector<Inclusion> entries_;
    std::unordered_map<Vertex, std::size_t> index_;
    std::optional<Contradiction> final_;
};

/// A depurated refutation: root assignment, the inclusions the contradiction
/// actually depends on (chronological), then the contradiction.
struct Certificate {
    GraphBinding binding;
    RootTriangle root;
    std::vector<Inclusion> steps;
    Contradiction contradiction;

    friend bool operator==(const Certificate &, const Certificate &) = default;
};

/// Keeps only the inclusions backward-reachable from the contradiction
/// through predecessor links. Root vertices end the walk.
[[nodiscard]] inline Certificate depurate(const ProofLog &log)
{
    if (!log.final_statement())
        throw ProofError("cannot depurate a log without a contradiction");

    std::vector<bool> needed(log.entries().size(), false);
    std::vector<Vertex> pending = predecessors(*log.final_statement());
    while (!pending.empty()) {
        const Vertex v = pending.back();
        pending.pop_back();
        if (log.is_root(v))
            continue;
        auto pos = log.position(v);
        if (!pos)
            throw ProofError("dangling reference to vertex " + std::to_string(v));
        if (needed[*pos])
            continue;
        needed[*pos] = true;
        for (Vertex p : predecessors(log.entries()[*pos]))
            pending.push_back(p);
    }

    Certificate cert{log.binding(), log.root(), {}, *log.final_statement()};
    for (std::size_t i = 0; i < needed.size(); ++i) {
        if (needed[i])
            cert.steps.push_back(log.entries()[i]);
    }
    return cert;
}

/// Replays a certificate into a fresh log; throws ProofError if the steps
/// are not in a valid dependency order.
[[nodiscard]] inline ProofLog log_from_certificate(const Certificate &cert)
{
    ProofLog log(cert.binding, cert.root);
    for (const auto &step : cert.steps)
        log.record(step);
    log.record(cert.contradiction);
    return log;
}

namespace detail {

inline std::string edge_text(Vertex p, Vertex q)
{
    return "e[" + std::to_string(std::min(p, q)) + ", " + std::to_string(std::max(p, q)) + "]";
}

inline std::string triangle_text(Vertex p, Vertex q, Vertex r)
{
    Vertex v[3] = {p, q, r};
    std::sort(std::begin(v), std::end(v));
    return "[" + std::to_string(v[0]) + ", " + std::to_string(v[1]) + ", " + std::to_string(v[2]) + "]";
}

/// The two sets other than `dst`, lower-named first.
inline std::pair<SetId, SetId> sources_of(SetId dst)
{
    switch (dst) {
    case SetId::A:
        return {SetId::B, SetId::C};
    case SetId::B:
        return {SetId::A, SetId::C};
    default:
        return {SetId::A, SetId::B};
    }
}

}  // namespace detail

[[nodiscard]] inline std::string render_line(const Inclusion &step)
{
    std::ostringstream out;
    if (const auto *r1 = std::get_if<Rho1Inclusion>(&step)) {
        const char set = set_name(r1->target);
        out << "Triangle " << detail::triangle_text(r1->a, r1->b, r1->c) << " has edges: "
            << detail::edge_text(r1->a, r1->x) << " and " << detail::edge_text(r1->b, r1->y) << " with set " << set
            << " hence vertex " << r1->c << " must be assigned to set " << set << '.';
    } else {
        const auto &r2 = std::get<Rho2Inclusion>(step);
        auto [first, second] = detail::sources_of(r2.dst);
        out << "Vertex " << r2.x << " has an edge with one vertex of set " << set_name(first) << " ("
            << detail::edge_text(r2.x, r2.a) << ") and one of " << set_name(second) << " ("
            << detail::edge_text(r2.x, r2.b) << ") hence vertex " << r2.x << " must be assigned to set "
            << set_name(r2.dst) << '.';
    }
    return out.str();
}

[[nodiscard]] inline std::string render_line(const Contradiction &end)
{
    std::ostringstream out;
    if (const auto *r1 = std::get_if<Rho1Contradiction>(&end)) {
        out << "Every vertex of triangle " << detail::triangle_text(r1->a, r1->b, r1->c)
            << " is joined by an edge to an element in the set " << set_name(r1->target) << " ("
            << detail::edge_text(r1->a, r1->x) << ", " << detail::edge_text(r1->b, r1->y) << " and "
            << detail::edge_text(r1->c, r1->z) << ").";
    } else {
        const auto &r2 = std::get<Rho2Contradiction>(end);
        out << "Vertex " << r2.x << " has an edge with at least, one vertex of set A (" << detail::edge_text(r2.x, r2.a)
            << ") one of B (" << detail::edge_text(r2.x, r2.b) << ") and one of C (" << detail::edge_text(r2.x, r2.c)
            << ").";
    }
    return out.str();
}

/// Human-readable proof by contradiction.
[[nodiscard]] inline std::string render_human(const Certificate &cert)
{
    const auto &r = cert.root;
    std::ostringstream out;
    out << "The graph G is not 3-colorable.\n"
        << "Proof: (by contradiction)\n"
        << "Assume G is 3-colorable, hence it should exist the possibility of partitioning the vertices of G "
           "in three independent sets: A, B and C.\n"
        << "Thus:\n"
        << "Select triangle T=[" << r.a << ", " << r.b << ", " << r.c << "]\n"
        << "Let A, B, C be three independent sets, each one containing a different vertex of triangle T:\n"
        << "A=[" << r.a << "], B=[" << r.b << "], C=[" << r.c << "]\n";
    for (const auto &step : cert.steps)
        out << "  * " << render_line(step) << '\n';
    out << "  * " << render_line(cert.contradiction) << '\n';
    out << "Thus, does not exist the possibility of partitioning the vertices of G in three independent sets: "
           "A, B and C (contradiction).\n"
        << "Therefore G is not 3-colorable.\n"
        << "Q.E.D.\n";
    return out.str();
}

[[nodiscard]] inline std::string machine_record(const Inclusion &step)
{
    std::ostringstream out;
    if (const auto *r1 = std::get_if<Rho1Inclusion>(&step)) {
        out << "i1 " << r1->c << ' ' << set_name(r1->target) << ' ' << r1->a << ' ' << r1->b << ' ' << r1->x << ' '
            << r1->y;
    } else {
        const auto &r2 = std::get<Rho2Inclusion>(step);
        out << "i2 " << r2.x << ' ' << set_name(r2.dst) << ' ' << r2.a << ' ' << r2.b;
    }
    return out.str();
}

[[nodiscard]] inline std::string machine_record(const Contradiction &end)
{
    std::ostringstream out;
    if (const auto *r1 = std::get_if<Rho1Contradiction>(&end)) {
        out << "n1 " << set_name(r1->target) << ' ' << r1->a << ' ' << r1->b << ' ' << r1->c << ' ' << r1->x << ' '
            << r1->y << ' ' << r1->z;
    } else {
        const auto &r2 = std::get<Rho2Contradiction>(end);
        out << "n2 " << r2.x << ' ' << r2.a << ' ' << r2.b << ' ' << r2.c;
    }
    return out.str();
}

/// Line-based certificate, one newline-terminated record per line.
[[nodiscard]] inline std::string render_machine(const Certificate &cert)
{
    std::ostringstream out;
    out << "g " << cert.binding.n << ' ' << cert.binding.m << '\n';
    out << "t " << cert.root.a << ' ' << cert.root.b << ' ' << cert.root.c << '\n';
    for (const auto &step : cert.steps)
        out << machine_record(step) << '\n';
    out << machine_record(cert.contradiction) << '\n';
    return out.str();
}

/// Every statement of an undepurated log in machine-record syntax. When the
/// log ends in a contradiction the output is itself a checkable certificate.
[[nodiscard]] inline std::string render_log(const ProofLog &log)
{
    std::ostringstream out;
    out << "c undepurated log, " << log.entries().size() << " inclusions\n";
    out << "g " << log.binding().n << ' ' << log.binding().m << '\n';
    out << "t " << log.root().a << ' ' << log.root().b << ' ' << log.root().c << '\n';
    for (const auto &step : log.entries())
        out << machine_record(step) << '\n';
    if (log.final_statement())
        out << machine_record(*log.final_statement()) << '\n';
    else
        out << "c no contradiction reached\n";
    return out.str();
}

}  // namespace tricolor
