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

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qgraph/metric_graph.hpp"
#include "qgraph/rational.hpp"

namespace qgraph {

/// Balanced-vertex effective-size bounds for an equilateral graph.
struct MainBound {
  std::size_t edge_count = 0;
  std::size_t n_bal = 0;
  std::size_t n_nonneig = 0;
  Rational ell;
  Rational volume;      // N ell
  Rational bound_bal;   // N ell - (ell/2) n_bal
  Rational bound_main;  // N ell - (ell/2)(n_bal + n_nonneig)
};

/// Requires an equilateral, loop-free graph without parallel edges and with
/// standard or Dirichlet couplings; throws Error(kPreconditionViolated).
MainBound bound_main(const MetricGraph& g);

using VertexSquare = std::array<std::size_t, 4>;

/// 4-cycles v1-v2-v3-v4 of balanced vertices with neither diagonal present.
/// Each square is reported once, starting at its smallest vertex index and
/// continuing towards the smaller of that vertex's two square neighbors.
std::vector<VertexSquare> detect_balanced_squares(const MetricGraph& g);

struct RankCriterion {
  std::size_t rank_s = 0;
  std::size_t rank_s2 = 0;
  bool strict = false;  // rank(S^2) < rank(S): W falls below the n_bal bound
};

/// Exact ranks of S and S^2. Requires an equilateral graph with standard or
/// Dirichlet couplings; checks rank(S) == 2N - n_bal (Error(kInternal) if not).
RankCriterion check_rank_criterion(const MetricGraph& g);

struct BoundReport {
  MainBound main;
  std::vector<VertexSquare> squares;
  std::optional<Rational> bound_square;  // (N - 3) ell when a square exists
  Rational w_actual;
  RankCriterion rank;
};

/// Everything above plus W from the secular polynomial; throws
/// Error(kInternal) if W exceeds any applicable bound.
BoundReport bound_report(const MetricGraph& g);

}  // namespace qgraph
