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

#include <array>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tricolor/graph.hpp"

namespace tricolor {

/// One of the three colour classes.
enum class SetId : std::uint8_t { A = 0, B = 1, C = 2 };

inline constexpr std::array<SetId, 3> kAllSets = {SetId::A, SetId::B, SetId::C};

[[nodiscard]] constexpr std::size_t index_of(SetId s) noexcept { return static_cast<std::size_t>(s); }

[[nodiscard]] constexpr char set_name(SetId s) noexcept { return "ABC"[index_of(s)]; }

[[nodiscard]] constexpr std::optional<SetId> parse_set_name(std::string_view token) noexcept
{
    if (token == "A")
        return SetId::A;
    if (token == "B")
        return SetId::B;
    if (token == "C")
        return SetId::C;
    return std::nullopt;
}

/// The set that is neither `x` nor `y` (which must differ).
[[nodiscard]] constexpr SetId third_set(SetId x, SetId y) noexcept
{
    return static_cast<SetId>(3 - index_of(x) - index_of(y));
}

/// Per-vertex colouring with colours A/B/C, indexed by 1-based label.
class Coloring {
public:
    Coloring() = default;
    explicit Coloring(std::size_t n) : colors_(n, SetId::A) {}

    [[nodiscard]] std::size_t size() const noexcept { return colors_.size(); }
    [[nodiscard]] SetId operator[](Vertex v) const { return colors_[v - 1]; }
    SetId &operator[](Vertex v) { return colors_[v - 1]; }

    /// Total over V(g) and no edge joins two equal colours.
    [[nodiscard]] bool is_proper(const Graph &g) const
    {
        if (colors_.size() != g.vertex_count())
            return false;
        for (const Edge &e : g.edges()) {
            if ((*this)[e.u] == (*this)[e.v])
                return false;
        }
        return true;
    }

    friend bool operator==(const Coloring &, const Coloring &) = default;

private:
    std::vector<SetId> colors_;
};

/// The three growing independent sets plus the pool S of unassigned vertices.
///
/// A vertex is in exactly one of: set A, set B, set C, the pool, or outside
/// (neither). Every assignment gets a stamp from a monotone clock so callers
/// can ask which members were already present at an earlier moment.
class PartitionState {
public:
    using Stamp = std::uint64_t;
    static constexpr Stamp kNever = std::numeric_limits<Stamp>::max();

    PartitionState() = default;
    explicit PartitionState(std::size_t n) : slot_(n, kOutside), stamp_(n, kNever) {}

    /// A = {t.a}, B = {t.b}, C = {t.c}, every other vertex unassigned.
    [[nodiscard]] static PartitionState rooted(const Graph &g, const Triangle &t)
    {
        PartitionState s(g.vertex_count());
        for (Vertex v = 1; v <= g.vertex_count(); ++v)
            s.make_unassigned(v);
        s.assign(t.a, SetId::A);
        s.assign(t.b, SetId::B);
        s.assign(t.c, SetId::C);
        return s;
    }

    [[nodiscard]] std::size_t vertex_count() const noexcept { return slot_.size(); }

    void make_unassigned(Vertex v)
    {
        require_outside(v);
        slot_[v - 1] = kPool;
        ++pool_size_;
    }

    /// Moves `v` from the pool (or from outside) into set `s`.
    void assign(Vertex v, SetId s)
    {
        auto &slot = slot_.at(v - 1);
        if (slot < kPool)
            throw std::logic_error("vertex " + std::to_string(v) + " is already in set " + set_name(SetId(slot)));
        if (slot == kPool)
            --pool_size_;
        slot = static_cast<std::uint8_t>(s);
        stamp_[v - 1] = clock_++;
        members_[index_of(s)].push_back(v);
    }

    [[nodiscard]] bool unassigned(Vertex v) const { return slot_[v - 1] == kPool; }

    [[nodiscard]] std::optional<SetId> set_of(Vertex v) const
    {
        if (slot_[v - 1] < kPool)
            return SetId(slot_[v - 1]);
        return std::nullopt;
    }

    [[nodiscard]] bool in_set(Vertex v, SetId s) const { return slot_[v - 1] == static_cast<std::uint8_t>(s); }

    /// Value the next assignment will receive.
    [[nodiscard]] Stamp clock() const noexcept { return clock_; }

    [[nodiscard]] Stamp stamp(Vertex v) const { return stamp_[v - 1]; }

    /// Members of `s` in insertion order.
    [[nodiscard]] const std::vector<Vertex> &members(SetId s) const { return members_[index_of(s)]; }

    [[nodiscard]] std::size_t unassigned_count() const noexcept { return pool_size_; }

    /// Smallest neighbour of `v` in `s` that joined before `before`.
    [[nodiscard]] std::optional<Vertex> neighbor_in(const Graph &g, Vertex v, SetId s, Stamp before = kNever) const
    {
        for (Vertex u : g.neighbors(v)) {
            if (in_set(u, s) && stamp_[u - 1] < before)
                return u;
        }
        return std::nullopt;
    }

    /// Empty when the state is consistent with `g`: slot bookkeeping agrees
    /// with the member lists and no set holds both ends of an edge.
    [[nodiscard]] std::optional<std::string> check_invariants(const Graph &g) const
    {
        if (slot_.size() != g.vertex_count())
            return "state covers " + std::to_string(slot_.size()) + " vertices, graph has " +
                   std::to_string(g.vertex_count());
        std::size_t pool = 0;
        std::array<std::size_t, 3> counts{};
        for (std::size_t i = 0; i < slot_.size(); ++i) {
            if (slot_[i] == kPool)
                ++pool;
            else if (slot_[i] < kPool)
                ++counts[slot_[i]];
        }
        if (pool != pool_size_)
            return "pool size mismatch";
        for (SetId s : kAllSets) {
            if (counts[index_of(s)] != members_[index_of(s)].size())
                return std::string("member list of set ") + set_name(s) + " out of sync";
            for (Vertex v : members_[index_of(s)]) {
                if (!in_set(v, s))
                    return "vertex " + std::to_string(v) + " listed in " + set_name(s) + " but not stored there";
            }
        }
        for (const Edge &e : g.edges()) {
            auto su = set_of(e.u);
            if (su && su == set_of(e.v))
                return std::string("set ") + set_name(*su) + " contains edge {" + std::to_string(e.u) + "," +
                       std::to_string(e.v) + "}";
        }
        return std::nullopt;
    }

    /// Colouring read off the sets; only meaningful once the pool is empty
    /// and every vertex is in some set.
    [[nodiscard]] std::optional<Coloring> coloring() const
    {
        Coloring out(slot_.size());
        for (Vertex v = 1; v <= slot_.size(); ++v) {
            auto s = set_of(v);
            if (!s)
                return std::nullopt;
            out[v] = *s;
        }
        return out;
    }

private:
    static constexpr std::uint8_t kPool = 3;
    static constexpr std::uint8_t kOutside = 4;

    void require_outside(Vertex v) const
    {
        if (slot_.at(v - 1) != kOutside)
            throw std::logic_error("vertex " + std::to_string(v) + " already placed");
    }

    std::vector<std::uint8_t> slot_;
    std::vector<Stamp> stamp_;
    std::array<std::vector<Vertex>, 3> members_;
    std::size_t pool_size_ = 0;
    Stamp clock_ = 0;
};

}  // namespace tricolor
