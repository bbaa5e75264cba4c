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
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "tricolor/dimacs.hpp"
#include "tricolor/graph.hpp"
#include "tricolor/partition.hpp"
#include "tricolor/proof.hpp"

namespace tricolor {

enum class VerifyReason {
    BadSyntax,
    GraphMismatch,
    MissingEdge,
    BadMembership,
    VertexReassigned,
    NoContradiction,
    TrailingRecords,
};

[[nodiscard]] constexpr const char *reason_code(VerifyReason r) noexcept
{
    switch (r) {
    case VerifyReason::BadSyntax:
        return "BAD_SYNTAX";
    case VerifyReason::GraphMismatch:
        return "GRAPH_MISMATCH";
    case VerifyReason::MissingEdge:
        return "MISSING_EDGE";
    case VerifyReason::BadMembership:
        return "BAD_MEMBERSHIP";
    case VerifyReason::VertexReassigned:
        return "VERTEX_REASSIGNED";
    case VerifyReason::NoContradiction:
        return "NO_CONTRADICTION";
    case VerifyReason::TrailingRecords:
        return "TRAILING_RECORDS";
    }
    return "UNKNOWN";
}

struct VerifyFailure {
    std::size_t line = 0;  // 1-based physical line; 0 for end of input
    VerifyReason reason = VerifyReason::BadSyntax;
    std::string detail;
};

struct VerifyResult {
    std::optional<VerifyFailure> failure;

    [[nodiscard]] bool valid() const noexcept { return !failure; }
};

class CertificateError : public std::runtime_error {
public:
    CertificateError(std::size_t line, VerifyReason reason, const std::string &detail)
        : std::runtime_error("line " + std::to_string(line) + ": " + reason_code(reason) + ": " + detail),
          failure_{line, reason, detail}
    {
    }

    [[nodiscard]] const VerifyFailure &failure() const noexcept { return failure_; }

private:
    VerifyFailure failure_;
};

/// A parsed certificate together with the source line of every record.
struct ParsedCertificate {
    Certificate certificate;
    std::size_t binding_line = 0;
    std::size_t root_line = 0;
    std::vector<std::size_t> step_lines;
    std::size_t contradiction_line = 0;
};

namespace detail {

class RecordReader {
public:
    RecordReader(std::size_t line, std::vector<std::string_view> fields) : line_(line), fields_(std::move(fields)) {}

    void expect_arity(std::size_t n) const
    {
        if (fields_.size() != n)
            fail("record '" + std::string(fields_[0]) + "' expects " + std::to_string(n - 1) + " fields");
    }

    [[nodiscard]] std::uint64_t count(std::size_t i) const
    {
        auto v = parse_unsigned(fields_[i]);
        if (!v)
            fail("field " + std::to_string(i) + " is not a non-negative integer");
        return *v;
    }

    [[nodiscard]] Vertex vertex(std::size_t i) const
    {
        auto v = parse_unsigned(fields_[i]);
        if (!v || *v == 0 || *v > UINT32_MAX)
            fail("field " + std::to_string(i) + " is not a vertex label");
        return static_cast<Vertex>(*v);
    }

    [[nodiscard]] SetId set(std::size_t i) const
    {
        auto s = parse_set_name(fields_[i]);
        if (!s)
            fail("field " + std::to_string(i) + " is not one of A, B, C");
        return *s;
    }

    [[noreturn]] void fail(const std::string &why) const { throw CertificateError(line_, VerifyReason::BadSyntax, why); }

private:
    std::size_t line_;
    std::vector<std::string_view> fields_;
};

}  // namespace detail

/// Structural parse of the machine format; no graph checks.
///
/// Record order is fixed: `g`, `t`, any number of `i1`/`i2`, exactly one
/// `n1`/`n2`. `c` lines and blank lines may appear anywhere.
[[nodiscard]] inline ParsedCertificate parse_certificate_records(std::string_view text)
{
    enum class Expect { Binding, Root, Body, Done };
    Expect expect = Expect::Binding;
    ParsedCertificate out;

    detail::for_each_line(text, [&](std::size_t number, std::string_view line) {
        auto fields = detail::split_fields(line);
        if (fields.empty() || fields[0] == "c")
            return;
        const std::string_view kind = fields[0];
        detail::RecordReader rec(number, fields);

        switch (expect) {
        case Expect::Done:
            throw CertificateError(number, VerifyReason::TrailingRecords, "record after the contradiction");
        case Expect::Binding:
            if (kind != "g")
                rec.fail("first record must be 'g <n> <m>'");
            rec.expect_arity(3);
            out.certificate.binding = {static_cast<std::size_t>(rec.count(1)), static_cast<std::size_t>(rec.count(2))};
            out.binding_line = number;
            expect = Expect::Root;
            return;
        case Expect::Root:
            if (kind != "t")
                rec.fail("second record must be 't <a> <b> <c>'");
            rec.expect_arity(4);
            out.certificate.root = {rec.vertex(1), rec.vertex(2), rec.vertex(3)};
            out.root_line = number;
            expect = Expect::Body;
            return;
        case Expect::Body:
            break;
        }

        if (kind == "i1") {
            rec.expect_arity(7);
            out.certificate.steps.push_back(
                Rho1Inclusion{rec.vertex(1), rec.set(2), rec.vertex(3), rec.vertex(4), rec.vertex(5), rec.vertex(6)});
            out.step_lines.push_back(number);
        } else if (kind == "i2") {
            rec.expect_arity(5);
            out.certificate.steps.push_back(Rho2Inclusion{rec.vertex(1), rec.set(2), rec.vertex(3), rec.vertex(4)});
            out.step_lines.push_back(number);
        } else if (kind == "n1") {
            rec.expect_arity(8);
            out.certificate.contradiction = Rho1Contradiction{rec.set(1),    rec.vertex(2), rec.vertex(3), rec.vertex(4),
                                                              rec.vertex(5), rec.vertex(6), rec.vertex(7)};
            out.contradiction_line = number;
            expect = Expect::Done;
        } else if (kind == "n2") {
            rec.expect_arity(5);
            out.certificate.contradiction =
                Rho2Contradiction{rec.vertex(1), rec.vertex(2), rec.vertex(3), rec.vertex(4)};
            out.contradiction_line = number;
            expect = Expect::Done;
        } else {
            rec.fail("unknown record '" + std::string(kind) + "'");
        }
    });

    switch (expect) {
    case Expect::Binding:
        throw CertificateError(0, VerifyReason::BadSyntax, "missing 'g' record");
    case Expect::Root:
        throw CertificateError(0, VerifyReason::BadSyntax, "missing 't' record");
    case Expect::Body:
        throw CertificateError(0, VerifyReason::NoContradiction, "certificate ends without 'n1' or 'n2'");
    case Expect::Done:
        break;
    }
    return out;
}

[[nodiscard]] inline Certificate parse_certificate(std::string_view text)
{
    return parse_certificate_records(text).certificate;
}

namespace detail {

/// Membership state rebuilt from scratch; nothing the certificate claims
/// about sets is taken on trust.
class Replay {
public:
    explicit Replay(const Graph &g) : g_(g), set_of_(g.vertex_count() + 1) {}

    [[nodiscard]] bool in(Vertex v, SetId s) const { return g_.contains(v) && set_of_[v] == s; }
    [[nodiscard]] bool free(Vertex v) const { return g_.contains(v) && !set_of_[v]; }
    void put(Vertex v, SetId s) { set_of_[v] = s; }

private:
    const Graph &g_;
    std::vector<std::optional<SetId>> set_of_;
};

[[noreturn]] inline void reject(std::size_t line, VerifyReason reason, const std::string &detail)
{
    throw CertificateError(line, reason, detail);
}

inline void need_edge(const Graph &g, std::size_t line, Vertex p, Vertex q)
{
    if (!g.adjacent(p, q))
        reject(line, VerifyReason::MissingEdge, "no edge {" + std::to_string(p) + "," + std::to_string(q) + "}");
}

inline void need_member(const Replay &r, std::size_t line, Vertex v, SetId s)
{
    if (!r.in(v, s))
        reject(line, VerifyReason::BadMembership, "vertex " + std::to_string(v) + " is not in " + set_name(s));
}

inline void need_free(const Replay &r, std::size_t line, Vertex v)
{
    if (!r.free(v))
        reject(line, VerifyReason::VertexReassigned, "vertex " + std::to_string(v) + " is already assigned");
}

}  // namespace detail

/// Replays `cert_text` against `g`. Acceptance means `g` has no proper
/// 3-colouring: the root colours are fixed without loss of generality and
/// each later record is a forced consequence of the replayed state.
[[nodiscard]] inline VerifyResult verify(const Graph &g, std::string_view cert_text)
{
    using detail::need_edge;
    using detail::need_free;
    using detail::need_member;

    try {
        const ParsedCertificate parsed = parse_certificate_records(cert_text);
        const Certificate &cert = parsed.certificate;

        if (cert.binding.n != g.vertex_count() || cert.binding.m != g.edge_count()) {
            detail::reject(parsed.binding_line, VerifyReason::GraphMismatch,
                           "certificate is for n=" + std::to_string(cert.binding.n) +
                               " m=" + std::to_string(cert.binding.m));
        }

        detail::Replay state(g);
        const auto &root = cert.root;
        need_edge(g, parsed.root_line, root.a, root.b);
        need_edge(g, parsed.root_line, root.b, root.c);
        need_edge(g, parsed.root_line, root.a, root.c);
        state.put(root.a, SetId::A);
        state.put(root.b, SetId::B);
        state.put(root.c, SetId::C);

        for (std::size_t i = 0; i < cert.steps.size(); ++i) {
            const std::size_t line = parsed.step_lines[i];
            if (const auto *r1 = std::get_if<Rho1Inclusion>(&cert.steps[i])) {
                need_edge(g, line, r1->a, r1->b);
                need_edge(g, line, r1->b, r1->c);
                need_edge(g, line, r1->a, r1->c);
                need_edge(g, line, r1->a, r1->x);
                need_edge(g, line, r1->b, r1->y);
                need_member(state, line, r1->x, r1->target);
                need_member(state, line, r1->y, r1->target);
                need_free(state, line, r1->c);
                state.put(r1->c, r1->target);
            } else {
                const auto &r2 = std::get<Rho2Inclusion>(cert.steps[i]);
                need_edge(g, line, r2.x, r2.a);
                need_edge(g, line, r2.x, r2.b);
                const auto [lo, hi] = detail::sources_of(r2.dst);
                const bool ordered = state.in(r2.a, lo) && state.in(r2.b, hi);
                const bool swapped = state.in(r2.a, hi) && state.in(r2.b, lo);
                if (!ordered && !swapped) {
                    detail::reject(line, VerifyReason::BadMembership,
                                   "vertices " + std::to_string(r2.a) + " and " + std::to_string(r2.b) +
                                       " do not cover both sets other than " + set_name(r2.dst));
                }
                need_free(state, line, r2.x);
                state.put(r2.x, r2.dst);
            }
        }

        const std::size_t line = parsed.contradiction_line;
        if (const auto *r1 = std::get_if<Rho1Contradiction>(&cert.contradiction)) {
            need_edge(g, line, r1->a, r1->b);
            need_edge(g, line, r1->b, r1->c);
            need_edge(g, line, r1->a, r1->c);
            need_edge(g, line, r1->a, r1->x);
            need_edge(g, line, r1->b, r1->y);
            need_edge(g, line, r1->c, r1->z);
            need_member(state, line, r1->x, r1->target);
            need_member(state, line, r1->y, r1->target);
            need_member(state, line, r1->z, r1->target);
        } else {
            const auto &r2 = std::get<Rho2Contradiction>(cert.contradiction);
            need_edge(g, line, r2.x, r2.a);
            need_edge(g, line, r2.x, r2.b);
            need_edge(g, line, r2.x, r2.c);
            need_member(state, line, r2.a, SetId::A);
            need_member(state, line, r2.b, SetId::B);
            need_member(state, line, r2.c, SetId::C);
        }
    } catch (const CertificateError &e) {
        return {e.failure()};
    }
    return {};
}

}  // namespace tricolor
