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
#include <string>
#include <string_view>
#include <vector>

#include "qgraph/bond_graph.hpp"
#include "qgraph/metric_graph.hpp"
#include "qgraph/rational_matrix.hpp"

namespace qgraph {

/// Delete `bond`, which must end at the balanced vertex `vertex`.
struct DeletionStep {
  std::size_t vertex = 0;
  std::size_t bond = 0;
};

struct ReductionPlan {
  std::vector<DeletionStep> steps;
};

/// Transition introduced by a deletion: the change of S'[row, column]
/// relative to the matrix before the step.
struct GhostEntry {
  std::size_t row = 0;
  std::size_t column = 0;
  Rational amplitude;
  std::size_t step = 0;
};

struct ReducedSystem {
  RationalMatrix matrix;
  std::vector<std::size_t> zero_columns;  // deleted bonds, plan order
  std::vector<GhostEntry> ghost_entries;
};

/// V and V^{-1} for deleting one bond b1 into a balanced vertex: unit
/// diagonal, +1 (resp. -1) at rows b2..bd (the other bonds into that
/// vertex) of column b1.
struct DeletionTransform {
  RationalMatrix forward;
  RationalMatrix inverse;
};

/// Checks that ghost-edge deletion is admissible on g: equilateral, no loops,
/// no parallel edges, only standard or Dirichlet couplings.
/// Throws Error(kPreconditionViolated) naming the failed assumption.
void require_reducible(const MetricGraph& g);

/// Throws Error(kPreconditionViolated) if the bond does not end at a
/// balanced standard-coupling vertex or g is not reducible.
DeletionTransform deletion_transform(const MetricGraph& g, const BondGraph& bg, std::size_t bond);

/// S' = V_m^{-1} ... V_1^{-1} S V_1 ... V_m, applied step by step.
/// Throws Error(kPlanConflict) when a step deletes a bond that received ghost
/// entries earlier, Error(kPreconditionViolated) for invalid steps (wrong
/// vertex, repeated vertex or bond).
ReducedSystem apply_reduction(const MetricGraph& g, const BondGraph& bg, const RationalMatrix& s,
                              const ReductionPlan& plan);

/// Exact equality of det(zS - I) before and after.
bool verify_reduction(const RationalMatrix& s, const ReducedSystem& reduced);

/// One step per balanced vertex (vertex order), deleting its incoming bond
/// of smallest index.
ReductionPlan default_plan(const MetricGraph& g, const BondGraph& bg);

/// Plan file: JSON array of {"vertex": "<id>", "bond": "<label>"} where the
/// bond label is the edge id, prefixed with '^' for the reversed bond.
/// Throws Error(kParse) for malformed text or unknown ids.
ReductionPlan parse_plan(std::string_view json_text, const MetricGraph& g, const BondGraph& bg);

}  // namespace qgraph
