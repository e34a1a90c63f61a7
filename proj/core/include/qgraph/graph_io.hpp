// Copyright 2026 The qgraph Authors
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

#include <filesystem>
#include <string>
#include <string_view>

#include "qgraph/metric_graph.hpp"

namespace qgraph {

/// Parses the JSON graph schema:
///   { "vertices": [ {"id": "v1", "leads": 3,
///                    "coupling": "standard" | "dirichlet" |
///                                {"unitary": [[{"re": .., "im": ..}, ..], ..]}} ],
///     "edges": [ {"id": "e1", "from": "v1", "to": "v2", "length": "1"} ] }
/// Lengths are decimal strings, parsed exactly. "leads" defaults to 0 and
/// "coupling" to "standard". Unitary entries may also be plain numbers.
/// Throws Error(kParse) on malformed JSON or schema mismatches; semantic
/// problems (bad lengths, non-unitary U) are left to validate_graph.
MetricGraph parse_graph(std::string_view json_text);
MetricGraph load_graph(const std::filesystem::path& path);

/// Inverse of parse_graph; lengths are written as exact "p/q" or integer strings.
std::string dump_graph(const MetricGraph& g);

}  // namespace qgraph
