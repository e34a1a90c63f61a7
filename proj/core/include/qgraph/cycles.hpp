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

#include <cstddef>
#include <vector>

namespace qgraph {

/// Adjacency lists of a directed graph on nodes 0..n-1.
using Digraph = std::vector<std::vector<std::size_t>>;

/// Johnson's algorithm: every elementary circuit exactly once, each rotated
/// to start at its smallest node. Self-loops are circuits of length one.
/// Throws Error(kCapExceeded) as soon as more than `cap` circuits are found.
std::vector<std::vector<std::size_t>> simple_cycles(const Digraph& graph, std::size_t cap);

}  // namespace qgraph
