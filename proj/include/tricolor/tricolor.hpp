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

#include "tricolor/dimacs.hpp"
#include "tricolor/generator.hpp"
#include "tricolor/graph.hpp"
#include "tricolor/oracle.hpp"
#include "tricolor/partition.hpp"
#include "tricolor/proof.hpp"
#include "tricolor/solver.hpp"
#include "tricolor/verifier.hpp"
