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

// Subcommands of the `tricolor` tool. Kept in a header so the test suites
// can drive them in-process against string streams.
//
// Exit codes: 0 success (verify: certificate valid), 1 usage or input error,
// 2 internal error, 3 certificate invalid.

#pragma once

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tricolor/tricolor.hpp"

namespace tricolor::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kInternal = 2, kInvalid = 3 };

class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline std::string read_file(const std::string &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InputError("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline void write_file(const std::string &path, const std::string &text)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw InputError("cannot write '" + path + "'");
    out << text;
    if (!out.flush())
        throw InputError("failed writing '" + path + "'");
}

inline Graph load_graph(const std::string &path, std::ostream &err)
{
    const std::string text = read_file(path);
    try {
        DimacsParse parsed = parse_dimacs_with_warnings(text);
        for (const auto &w : parsed.warnings)
            err << "warning: " << path << ": " << w << '\n';
        return std::move(parsed.graph);
    } catch (const DimacsError &e) {
        throw InputError(path + ": " + e.what());
    }
}

inline Triangle parse_root(const std::string &text, const Graph &g)
{
    std::vector<Vertex> labels;
    std::stringstream in(text);
    std::string part;
    while (std::getline(in, part, ',')) {
        auto v = tricolor::detail::parse_unsigned(part);
        if (!v || *v == 0 || *v > UINT32_MAX)
            throw InputError("--triangle expects a,b,c with positive labels");
        labels.push_back(static_cast<Vertex>(*v));
    }
    if (labels.size() != 3)
        throw InputError("--triangle expects exactly three labels");
    auto t = make_triangle(g, labels[0], labels[1], labels[2]);
    if (!t)
        throw InputError("--triangle " + text + " is not a triangle of the graph");
    return *t;
}

inline void print_coloring(std::ostream &out, const Coloring &c)
{
    out << "COLORING";
    for (Vertex v = 1; v <= c.size(); ++v)
        out << ' ' << v << '=' << set_name(c[v]);
    out << '\n';
}

}  // namespace detail

struct SolveArgs {
    std::string input;
    std::string proof_path;
    std::string human_path;
    std::string log_path;
    std::string triangle;
    bool undetermined_as_yes = false;
    unsigned jobs = 1;
};

inline int cmd_solve(const SolveArgs &args, std::ostream &out, std::ostream &err)
{
    const Graph g = detail::load_graph(args.input, err);
    std::optional<Triangle> root;
    if (!args.triangle.empty())
        root = detail::parse_root(args.triangle, g);

    const auto start = std::chrono::steady_clock::now();
    Verdict verdict;
    if (root) {
        TriangleResult r = test_triangle(g, *root);
        verdict.kind = r.kind;
        verdict.root = root;
        verdict.certificate = std::move(r.certificate);
        verdict.coloring = std::move(r.coloring);
        verdict.log = std::move(r.log);
        verdict.stats = r.stats;
        verdict.triangle_count = 1;
    } else {
        SolveOptions options;
        options.jobs = args.jobs;
        verdict = is_3_colorable(g, options);
    }
    std::string machine;
    std::string human;
    if (verdict.certificate) {
        machine = render_machine(*verdict.certificate);
        human = render_human(*verdict.certificate);
    }
    const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start);

    Answer shown = verdict.kind;
    if (args.undetermined_as_yes && shown == Answer::Undetermined)
        shown = Answer::Yes;

    out << "NOTE graph is not checked for planarity; NO answers are sound for any simple graph\n";
    out << "GRAPH n=" << g.vertex_count() << " m=" << g.edge_count() << '\n';
    out << "TRIANGLES " << verdict.triangle_count << '\n';
    out << "TRIANGLES_TESTED " << verdict.stats.triangles_tested << '\n';
    out << "RULE_APPLICATIONS " << verdict.stats.rule_applications << '\n';
    out << "INCLUSIONS " << verdict.stats.inclusions << '\n';
    out << "RESULT " << answer_name(shown) << '\n';
    if (verdict.root && verdict.kind != Answer::Undetermined)
        out << "ROOT " << verdict.root->a << ' ' << verdict.root->b << ' ' << verdict.root->c << '\n';
    if (verdict.certificate)
        out << "STEPS " << verdict.certificate->steps.size() << '\n';
    if (verdict.coloring)
        detail::print_coloring(out, *verdict.coloring);
    out << "TIME_MS " << std::fixed << std::setprecision(3) << elapsed.count() << '\n';

    if (verdict.certificate) {
        if (!args.proof_path.empty())
            detail::write_file(args.proof_path, machine);
        if (!args.human_path.empty())
            detail::write_file(args.human_path, human);
    } else if (!args.proof_path.empty() || !args.human_path.empty()) {
        err << "note: no certificate written, result is " << answer_name(verdict.kind) << '\n';
    }
    if (!args.log_path.empty()) {
        if (verdict.log)
            detail::write_file(args.log_path, render_log(*verdict.log));
        else
            err << "note: no deciding triangle, no log written\n";
    }
    return kOk;
}

inline int cmd_verify(const std::string &graph_path, const std::string &cert_path, std::ostream &out,
                      std::ostream &err)
{
    const Graph g = detail::load_graph(graph_path, err);
    const std::string text = detail::read_file(cert_path);
    const VerifyResult result = verify(g, text);
    if (result.valid()) {
        out << "VALID\n";
        return kOk;
    }
    out << "INVALID " << result.failure->line << ' ' << reason_code(result.failure->reason) << '\n';
    err << cert_path << ":" << result.failure->line << ": " << result.failure->detail << '\n';
    return kInvalid;
}

inline int cmd_oracle(const std::string &graph_path, std::size_t cap, std::ostream &out, std::ostream &err)
{
    const Graph g = detail::load_graph(graph_path, err);
    OracleAnswer answer;
    try {
        answer = oracle_3color(g, cap);
    } catch (const OracleCapExceeded &e) {
        throw InputError(std::string(e.what()) + " (raise it with --cap)");
    }
    if (!answer.colorable) {
        out << "NOT_COLORABLE\n";
        return kOk;
    }
    out << "COLORABLE";
    for (Vertex v = 1; v <= g.vertex_count(); ++v)
        out << ' ' << v << '=' << index_of((*answer.witness)[v]) + 1;
    out << '\n';
    return kOk;
}

inline int emit_graph(const Graph &g, const std::string &path, std::ostream &out)
{
    detail::write_file(path, to_dimacs(g));
    out << "GRAPH n=" << g.vertex_count() << " m=" << g.edge_count() << '\n';
    return kOk;
}

inline int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Polynomial 3-colourability refutation with checkable certificates", "tricolor"};
    app.require_subcommand(1);

    SolveArgs solve;
    auto *solve_cmd = app.add_subcommand("solve", "decide 3-colourability of a DIMACS graph");
    solve_cmd->add_option("input", solve.input, "DIMACS .col file")->required();
    solve_cmd->add_option("--proof", solve.proof_path, "write the machine certificate here on NO");
    solve_cmd->add_option("--human-proof", solve.human_path, "write the human-readable proof here on NO");
    solve_cmd->add_option("--full-log", solve.log_path, "write the undepurated inference log here");
    solve_cmd->add_option("--triangle", solve.triangle, "only test this root triangle, given as a,b,c");
    solve_cmd->add_flag("--paper-compat", solve.undetermined_as_yes, "report UNDETERMINED as YES");
    solve_cmd->add_option("--jobs", solve.jobs, "worker threads for root triangles")->check(CLI::PositiveNumber);

    std::string verify_graph;
    std::string verify_cert;
    auto *verify_cmd = app.add_subcommand("verify", "check a machine certificate against a graph");
    verify_cmd->add_option("graph", verify_graph, "DIMACS .col file")->required();
    verify_cmd->add_option("certificate", verify_cert, "certificate file")->required();

    std::string oracle_graph;
    std::size_t oracle_cap = kDefaultOracleCap;
    auto *oracle_cmd = app.add_subcommand("oracle", "exact 3-colourability by exhaustive search");
    oracle_cmd->add_option("graph", oracle_graph, "DIMACS .col file")->required();
    oracle_cmd->add_option("--cap", oracle_cap, "largest vertex count the search accepts");

    auto *gen_cmd = app.add_subcommand("gen", "write a generated instance as DIMACS");
    gen_cmd->require_subcommand(1);
    std::string gen_output;
    std::uint64_t gen_seed = 0;
    std::size_t gen_size = 0;
    std::string gen_base;
    double gen_keep = 1.0;

    auto *wheel_cmd = gen_cmd->add_subcommand("wheel", "wheel with rim length k (hub is k+1)");
    wheel_cmd->add_option("k", gen_size, "rim length")->required();
    wheel_cmd->add_option("-o,--output", gen_output, "output path")->required();

    auto *stacked_cmd = gen_cmd->add_subcommand("stacked", "random stacked triangulation on n vertices");
    stacked_cmd->add_option("n", gen_size, "vertex count")->required();
    stacked_cmd->add_option("--seed", gen_seed, "generator seed");
    stacked_cmd->add_option("-o,--output", gen_output, "output path")->required();

    auto *subgraph_cmd = gen_cmd->add_subcommand("subgraph", "random edge subgraph of a DIMACS graph");
    subgraph_cmd->add_option("input", gen_base, "DIMACS .col file")->required();
    subgraph_cmd->add_option("--keep", gen_keep, "probability of keeping each edge")->required();
    subgraph_cmd->add_option("--seed", gen_seed, "generator seed");
    subgraph_cmd->add_option("-o,--output", gen_output, "output path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*solve_cmd)
            return cmd_solve(solve, out, err);
        if (*verify_cmd)
            return cmd_verify(verify_graph, verify_cert, out, err);
        if (*oracle_cmd)
            return cmd_oracle(oracle_graph, oracle_cap, out, err);
        if (*wheel_cmd)
            return emit_graph(gen_wheel(gen_size), gen_output, out);
        if (*stacked_cmd)
            return emit_graph(gen_stacked_triangulation(gen_size, gen_seed), gen_output, out);
        if (*subgraph_cmd)
            return emit_graph(gen_edge_subgraph(detail::load_graph(gen_base, err), gen_keep, gen_seed), gen_output,
                              out);
    } catch (const InputError &e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const GeneratorError &e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception &e) {
        err << "internal error: " << e.what() << '\n';
        return kInternal;
    }
    return kUsage;
}

}  // namespace tricolor::cli
