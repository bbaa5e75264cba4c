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

// Minimal library client: solve a DIMACS graph, check the refutation with
// the independent verifier and print it in prose.
//
//   tricolor_example samples/demo.col

#include <fstream>
#include <iostream>
#include <sstream>

#include "tricolor/tricolor.hpp"

int main(int argc, char **argv)
{
    if (argc != 2) {
        std::cerr << "usage: " << argv[0] << " graph.col\n";
        return 1;
    }
    std::ifstream in(argv[1]);
    if (!in) {
        std::cerr << "cannot read " << argv[1] << '\n';
        return 1;
    }
    std::stringstream text;
    text << in.rdbuf();

    try {
        const tricolor::Graph g = tricolor::parse_dimacs(text.str());
        const tricolor::Verdict verdict = tricolor::is_3_colorable(g);
        std::cout << "answer: " << tricolor::answer_name(verdict.kind) << '\n';
        if (!verdict.certificate)
            return 0;

        const std::string machine = tricolor::render_machine(*verdict.certificate);
        const tricolor::VerifyResult check = tricolor::verify(g, machine);
        std::cout << "certificate: " << (check.valid() ? "valid" : "INVALID") << "\n\n"
                  << tricolor::render_human(*verdict.certificate);
        return check.valid() ? 0 : 2;
    } catch (const tricolor::DimacsError &e) {
        std::cerr << argv[1] << ": " << e.what() << '\n';
        return 1;
    }
}
