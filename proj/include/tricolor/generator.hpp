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
#include <stdexcept>
#include <string>
#include <vector>

#include "tricolor/graph.hpp"

namespace tricolor {

/// SplitMix64. Fixed constants so every generator output is reproducible
/// from (parameters, seed) on any platform:
///
///   state += 0x9E3779B97F4A7C15
///   z = state
///   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
///   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
///   return z ^ (z >> 31)
///
/// `below(k)` is `next() % k`; `unit()` is `(next() >> 11) * 2^-53`.
class SplitMix64 {
public:
    explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    constexpr std::uint64_t next() noexcept
    {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    constexpr std::uint64_t below(std::uint64_t k) noexcept { return next() % k; }

    constexpr double unit() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t state_;
};

class GeneratorError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Rim 1..k, hub k+1.
[[nodiscard]] inline Graph gen_wheel(std::size_t k)
{
    if (k < 3)
        throw GeneratorError("wheel rim length must be at least 3, got " + std::to_string(k));
    std::vector<Edge> edges;
    const auto hub = static_cast<Vertex>(k + 1);
    for (Vertex i = 1; i <= k; ++i) {
        edges.emplace_back(i, i == k ? 1 : i + 1);
        edges.emplace_back(i, hub);
    }
    return Graph(k + 1, edges);
}

/// Random stacked triangulation (Apollonian network) on n vertices.
///
/// Starts from K3 with its two faces, both listed as (1, 2, 3). Vertex v
/// picks face index `below(faces)`; face (a, b, c) is overwritten with
/// (a, b, v) and (b, c, v), (a, c, v) are appended.
[[nodiscard]] inline Graph gen_stacked_triangulation(std::size_t n, std::uint64_t seed)
{
    if (n < 3)
        throw GeneratorError("stacked triangulation needs at least 3 vertices, got " + std::to_string(n));
    SplitMix64 rng(seed);
    std::vector<std::array<Vertex, 3>> faces = {{1, 2, 3}, {1, 2, 3}};
    std::vector<Edge> edges = {{1, 2}, {2, 3}, {1, 3}};
    for (Vertex v = 4; v <= n; ++v) {
        const std::size_t i = rng.below(faces.size());
        const auto [a, b, c] = faces[i];
        edges.emplace_back(a, v);
        edges.emplace_back(b, v);
        edges.emplace_back(c, v);
        faces[i] = {a, b, v};
        faces.push_back({b, c, v});
        faces.push_back({a, c, v});
    }
    return Graph(n, edges);
}

/// Keeps each edge of `g` (lexicographic order, one draw per edge) when
/// `unit() < keep_probability`.
[[nodiscard]] inline Graph gen_edge_subgraph(const Graph &g, double keep_probability, std::uint64_t seed)
{
    if (!(keep_probability >= 0.0 && keep_probability <= 1.0))
        throw GeneratorError("keep probability must lie in [0, 1]");
    SplitMix64 rng(seed);
    std::vector<Edge> kept;
    for (const Edge &e : g.edges()) {
        if (rng.unit() < keep_probability)
            kept.push_back(e);
    }
    return Graph(g.vertex_count(), kept);
}

}  // namespace tricolor
