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

#include <charconv>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tricolor/graph.hpp"

namespace tricolor {

/// Malformed DIMACS input. `line()` is 1-based, 0 when the problem is global
/// (for instance a missing `p` line).
class DimacsError : public std::runtime_error {
public:
    DimacsError(std::size_t line, const std::string &what)
        : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line)
    {
    }

    [[nodiscard]] std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

struct DimacsParse {
    Graph graph;
    std::vector<std::string> warnings;
};

namespace detail {

inline std::vector<std::string_view> split_fields(std::string_view line)
{
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t'))
            ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t')
            ++j;
        if (j > i)
            out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

/// Unsigned decimal, no sign, no trailing garbage.
inline std::optional<std::uint64_t> parse_unsigned(std::string_view token)
{
    if (token.empty() || token.front() == '+' || token.front() == '-')
        return std::nullopt;
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
        return std::nullopt;
    return value;
}

/// Calls `fn(line_number, line)` for each physical line, with a trailing
/// carriage return stripped.
template <typename Fn>
void for_each_line(std::string_view text, Fn &&fn)
{
    std::size_t number = 0;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);
        fn(++number, line);
        start = end + 1;
    }
}

}  // namespace detail

/// Parses the `.col` dialect: `c` comments, one `p edge <n> <m>` header and
/// `e <u> <v>` records. Duplicate edges collapse; a header edge count that
/// disagrees with the deduplicated count is reported as a warning.
[[nodiscard]] inline DimacsParse parse_dimacs_with_warnings(std::string_view text)
{
    std::optional<std::uint64_t> n;
    std::uint64_t declared_m = 0;
    std::vector<Edge> edges;

    detail::for_each_line(text, [&](std::size_t number, std::string_view line) {
        auto fields = detail::split_fields(line);
        if (fields.empty() || fields[0] == "c")
            return;
        if (fields[0] == "p") {
            if (n)
                throw DimacsError(number, "second 'p' line");
            if (fields.size() != 4 || fields[1] != "edge")
                throw DimacsError(number, "expected 'p edge <n> <m>'");
            auto vn = detail::parse_unsigned(fields[2]);
            auto vm = detail::parse_unsigned(fields[3]);
            if (!vn || !vm || *vn > UINT32_MAX)
                throw DimacsError(number, "non-integer or out-of-range count in 'p' line");
            n = *vn;
            declared_m = *vm;
            return;
        }
        if (fields[0] == "e") {
            if (!n)
                throw DimacsError(number, "'e' line before 'p' line");
            if (fields.size() != 3)
                throw DimacsError(number, "expected 'e <u> <v>'");
            auto u = detail::parse_unsigned(fields[1]);
            auto v = detail::parse_unsigned(fields[2]);
            if (!u || !v)
                throw DimacsError(number, "non-integer vertex label");
            if (*u < 1 || *u > *n || *v < 1 || *v > *n)
                throw DimacsError(number, "vertex label outside 1.." + std::to_string(*n));
            if (*u == *v)
                throw DimacsError(number, "self-loop on vertex " + std::to_string(*u));
            edges.emplace_back(static_cast<Vertex>(*u), static_cast<Vertex>(*v));
            return;
        }
        throw DimacsError(number, "unknown record '" + std::string(fields[0]) + "'");
    });

    if (!n)
        throw DimacsError(0, "missing 'p edge <n> <m>' line");

    DimacsParse out{Graph(static_cast<std::size_t>(*n), edges), {}};
    if (out.graph.edge_count() != declared_m) {
        out.warnings.push_back("header declares " + std::to_string(declared_m) + " edges, found " +
                               std::to_string(out.graph.edge_count()) + " distinct");
    }
    return out;
}

[[nodiscard]] inline Graph parse_dimacs(std::string_view text)
{
    return parse_dimacs_with_warnings(text).graph;
}

/// Canonical serialisation: header, then edges in lexicographic order, each
/// line newline-terminated.
[[nodiscard]] inline std::string to_dimacs(const Graph &g)
{
    std::ostringstream out;
    out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const Edge &e : g.edges())
        out << "e " << e.u << ' ' << e.v << '\n';
    return out.str();
}

}  // namespace tricolor
