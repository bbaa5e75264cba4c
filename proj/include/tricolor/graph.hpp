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
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tricolor {

/// Vertex label, 1-based so that proofs cite the labels of the input file.
using Vertex = std::uint32_t;

/// Unordered vertex pair, normalised so that `u < v`.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    constexpr Edge() = default;
    constexpr Edge(Vertex a, Vertex b) : u(std::min(a, b)), v(std::max(a, b)) {}

    friend constexpr auto operator<=>(const Edge &, const Edge &) = default;
};

/// Three mutually adjacent vertices, stored ascending.
struct Triangle {
    Vertex a = 0;
    Vertex b = 0;
    Vertex c = 0;

    friend constexpr auto operator<=>(const Triangle &, const Triangle &) = default;
};

class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Simple undirected graph on the vertices 1..n.
///
/// Immutable once built: neighbour lists are sorted ascending and the edge
/// list is sorted lexicographically, which fixes every iteration order the
/// solver depends on. Loops are rejected; repeated edges collapse.
class Graph {
public:
    Graph() = default;

    explicit Graph(std::size_t n) : adjacency_(n) {}

    Graph(std::size_t n, std::span<const Edge> edges) : adjacency_(n)
    {
        edges_.reserve(edges.size());
        for (const Edge &e : edges) {
            if (e.u == e.v)
                throw GraphError("self-loop on vertex " + std::to_string(e.u));
            if (e.u < 1 || e.v > n)
                throw GraphError("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                 "} outside 1.." + std::to_string(n));
            edges_.push_back(e);
        }
        std::sort(edges_.begin(), edges_.end());
        edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
        for (const Edge &e : edges_) {
            adjacency_[e.u - 1].push_back(e.v);
            adjacency_[e.v - 1].push_back(e.u);
        }
        for (auto &list : adjacency_)
            std::sort(list.begin(), list.end());
    }

    Graph(std::size_t n, std::initializer_list<Edge> edges)
        : Graph(n, std::span<const Edge>(edges.begin(), edges.size()))
    {
    }

    [[nodiscard]] std::size_t vertex_count() const noexcept { return adjacency_.size(); }
    [[nodiscard]] std::size_t edge_count() const noexcept { return edges_.size(); }

    [[nodiscard]] bool contains(Vertex v) const noexcept { return v >= 1 && v <= adjacency_.size(); }

    /// Ascending neighbour list of `v`. `v` must be a vertex of the graph.
    [[nodiscard]] std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v - 1]; }

    [[nodiscard]] std::size_t degree(Vertex v) const { return adjacency_[v - 1].size(); }

    /// False for labels outside 1..n, so untrusted input may be queried directly.
    [[nodiscard]] bool adjacent(Vertex u, Vertex v) const noexcept
    {
        if (!contains(u) || !contains(v) || u == v)
            return false;
        if (adjacency_[u - 1].size() > adjacency_[v - 1].size())
            std::swap(u, v);
        const auto &list = adjacency_[u - 1];
        return std::binary_search(list.begin(), list.end(), v);
    }

    /// Lexicographically sorted, `u < v` within each edge.
    [[nodiscard]] std::span<const Edge> edges() const noexcept { return edges_; }

    [[nodiscard]] bool is_triangle(Vertex a, Vertex b, Vertex c) const noexcept
    {
        return adjacent(a, b) && adjacent(b, c) && adjacent(a, c);
    }

    friend bool operator==(const Graph &lhs, const Graph &rhs)
    {
        return lhs.vertex_count() == rhs.vertex_count() && lhs.edges_ == rhs.edges_;
    }

private:
    std::vector<std::vector<Vertex>> adjacency_;
    std::vector<Edge> edges_;
};

/// Builds a normalised triangle from three labels in any order, or nothing
/// if the labels are not a triangle of `g`.
[[nodiscard]] inline std::optional<Triangle> make_triangle(const Graph &g, Vertex x, Vertex y, Vertex z)
{
    if (!g.is_triangle(x, y, z))
        return std::nullopt;
    Vertex v[3] = {x, y, z};
    std::sort(std::begin(v), std::end(v));
    return Triangle{v[0], v[1], v[2]};
}

/// Calls `fn(c)` for every common neighbour `c` of `a` and `b`, ascending.
template <typename Fn>
void for_each_common_neighbor(const Graph &g, Vertex a, Vertex b, Fn &&fn)
{
    auto na = g.neighbors(a);
    auto nb = g.neighbors(b);
    auto i = na.begin();
    auto j = nb.begin();
    while (i != na.end() && j != nb.end()) {
        if (*i < *j) {
            ++i;
        } else if (*j < *i) {
            ++j;
        } else {
            fn(*i);
            ++i;
            ++j;
        }
    }
}

/// Every triangle of `g` exactly once, ascending by (a, b, c).
///
/// Walks each edge {a, b} in lexicographic order and intersects the
/// neighbour lists above b, so the output is already sorted.
[[nodiscard]] inline std::vector<Triangle> triangles(const Graph &g)
{
    std::vector<Triangle> out;
    for (const Edge &e : g.edges()) {
        for_each_common_neighbor(g, e.u, e.v, [&](Vertex c) {
            if (c > e.v)
                out.push_back({e.u, e.v, c});
        });
    }
    return out;
}

}  // namespace tricolor
