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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tricolor/graph.hpp"
#include "tricolor/partition.hpp"

namespace tricolor {

inline constexpr std::size_t kDefaultOracleCap = 32;

class OracleCapExceeded : public std::runtime_error {
public:
    OracleCapExceeded(std::size_t n, std::size_t cap)
        : std::runtime_error("graph has " + std::to_string(n) + " vertices, oracle cap is " + std::to_string(cap))
    {
    }
};

struct OracleAnswer {
    bool colorable = false;
    std::optional<Coloring> witness;  // present iff colorable
};

namespace detail {

// Exhaustive search, vertices in label order, colours tried 0, 1, 2. Each
// vertex keeps a bitmask of colours still allowed; assigning a colour strikes
// it from the later neighbours and the search backs up as soon as some
// domain empties.
class ThreeColorSearch {
public:
    explicit ThreeColorSearch(const Graph &g) : g_(g), domain_(g.vertex_count() + 1, 0b111), color_(g.vertex_count() + 1)
    {
        // First vertex takes colour 0, second is limited to {0, 1}. Any
        // colouring can be permuted into that shape.
        if (g.vertex_count() >= 1)
            domain_[1] = 0b001;
        if (g.vertex_count() >= 2)
            domain_[2] &= 0b011;
    }

    bool run() { return extend(1); }

    [[nodiscard]] Coloring coloring() const
    {
        Coloring out(g_.vertex_count());
        for (Vertex v = 1; v <= g_.vertex_count(); ++v)
            out[v] = static_cast<SetId>(color_[v]);
        return out;
    }

private:
    bool extend(Vertex v)
    {
        if (v > g_.vertex_count())
            return true;
        for (std::uint8_t c = 0; c < 3; ++c) {
            const std::uint8_t bit = std::uint8_t(1u << c);
            if (!(domain_[v] & bit))
                continue;
            color_[v] = c;
            const std::size_t mark = trail_.size();
            bool alive = true;
            for (Vertex u : g_.neighbors(v)) {
                if (u <= v || !(domain_[u] & bit))
                    continue;
                trail_.emplace_back(u, domain_[u]);
                domain_[u] &= std::uint8_t(~bit);
                if (domain_[u] == 0) {
                    alive = false;
                    break;
                }
            }
            if (alive && extend(v + 1))
                return true;
            while (trail_.size() > mark) {
                domain_[trail_.back().first] = trail_.back().second;
                trail_.pop_back();
            }
        }
        return false;
    }

    const Graph &g_;
    std::vector<std::uint8_t> domain_;
    std::vector<std::uint8_t> color_;
    std::vector<std::pair<Vertex, std::uint8_t>> trail_;
};

}  // namespace detail

/// Exact 3-colourability by backtracking. Refuses graphs above `cap`
/// vertices rather than running for an unbounded time.
[[nodiscard]] inline OracleAnswer oracle_3color(const Graph &g, std::size_t cap = kDefaultOracleCap)
{
    if (g.vertex_count() > cap)
        throw OracleCapExceeded(g.vertex_count(), cap);
    detail::ThreeColorSearch search(g);
    if (!search.run())
        return {};
    return {true, search.coloring()};
}

}  // namespace tricolor
