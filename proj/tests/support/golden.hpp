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

#include <string_view>

#include "qgraph/metric_graph.hpp"
#include "qgraph/rational_matrix.hpp"

namespace qgraph::testing {

// Three-edge star: Dirichlet leaves v1..v3, centre c with three leads.
MetricGraph star3(const Rational& ell = 1);
// Square v1 v2 v3 v4 with diagonal v4-v2; 2, 3, 2, 3 leads.
MetricGraph square_diagonal(const Rational& ell = 1);
// Complete graph on A..D, three leads each.
MetricGraph k4(const Rational& ell = 1);
// One edge with Dirichlet ends.
MetricGraph dirichlet_interval(const Rational& ell = 1);
// Cycle on four vertices, two leads each.
MetricGraph cycle4_balanced(const Rational& ell = 1);

/// Whitespace-separated table of rationals, one matrix row per line.
RationalMatrix parse_table(std::string_view text);

// Bond matrices in bond order 1..N, ^1..^N.
inline constexpr std::string_view kSquareDiagonalScattering = R"(
  0    0    0    1/2  0    -1/2 0    0    0    0
  1/3  0    0    0    1/3  0    -2/3 0    0    0
  0    1/2  0    0    0    0    0    -1/2 0    0
  0    0    1/3  0    0    0    0    0    -2/3 1/3
  0    0    1/3  0    0    0    0    0    1/3  -2/3
  -2/3 0    0    0    1/3  0    1/3  0    0    0
  0    -1/2 0    0    0    0    0    1/2  0    0
  0    0    -2/3 0    0    0    0    0    1/3  1/3
  0    0    0    -1/2 0    1/2  0    0    0    0
  1/3  0    0    0    -2/3 0    1/3  0    0    0
)";

// After deleting ^1, ^2, ^3, ^4.
inline constexpr std::string_view kSquareDiagonalReduced = R"(
  0    1/2  0    1/2  0    0 0 0 0 0
  1/3  0    2/3  0    1/3  0 0 0 0 -1/3
  0    1/2  0    1/2  0    0 0 0 0 0
  2/3  0    1/3  0    -1/3 0 0 0 0 1/3
  0    1/2  1/3  0    0    0 0 0 0 -2/3
  -2/3 0    0    0    1/3  0 0 0 0 0
  0    -1/2 0    0    0    0 0 0 0 0
  0    0    -2/3 0    0    0 0 0 0 1/3
  0    0    0    -1/2 0    0 0 0 0 0
  1/3  0    0    1/2  -2/3 0 0 0 0 0
)";

inline constexpr std::string_view kK4Scattering = R"(
  0    0    0    1/3  0    0    -2/3 0    0    0    0    1/3
  1/3  0    0    0    1/3  0    0    -2/3 0    0    0    0
  0    1/3  0    0    0    1/3  0    0    -2/3 0    0    0
  0    0    1/3  0    0    0    0    0    0    -2/3 1/3  0
  0    0    1/3  0    0    0    0    0    0    1/3  -2/3 0
  0    0    0    1/3  0    0    1/3  0    0    0    0    -2/3
  -2/3 0    0    0    1/3  0    0    1/3  0    0    0    0
  0    -2/3 0    0    0    1/3  0    0    1/3  0    0    0
  0    0    -2/3 0    0    0    0    0    0    1/3  1/3  0
  0    0    0    -2/3 0    0    1/3  0    0    0    0    1/3
  1/3  0    0    0    -2/3 0    0    1/3  0    0    0    0
  0    1/3  0    0    0    -2/3 0    0    1/3  0    0    0
)";

}  // namespace qgraph::testing
