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

#include "qgraph/reduction.hpp"

#include <algorithm>
#include <set>

#include "json.hpp"
#include "qgraph/errors.hpp"
#include "qgraph/polynomial.hpp"

namespace qgraph {

void require_reducible(const MetricGraph& g) {
  require_valid(g);
  const StructuralFlags flags = structural_flags(g);
  if (!flags.equilateral) throw Error(ErrorCode::kPreconditionViolated, "graph is not equilateral");
  if (flags.has_loops) {
    throw Error(ErrorCode::kPreconditionViolated, "graph has an edge that starts and ends in one vertex");
  }
  if (flags.has_parallel_edges) {
    throw Error(ErrorCode::kPreconditionViolated, "two vertices are connected by two or more edges");
  }
  for (const auto& v : g.vertices()) {
    if (is_general(v.coupling)) {
      throw Error(ErrorCode::kPreconditionViolated, "vertex " + v.id + " has general coupling");
    }
  }
}

DeletionTransform deletion_transform(const MetricGraph& g, const BondGraph& bg, std::size_t bond) {
  require_reducible(g);
  if (bond >= bg.size()) throw Error(ErrorCode::kPreconditionViolated, "bond index out of range");
  const std::size_t v = bg.bond(bond).target;
  if (!is_standard(g.vertex(v).coupling) || !is_balanced(g, v)) {
    throw Error(ErrorCode::kPreconditionViolated,
                "bond " + bg.label(bond) + " does not end at a balanced standard vertex");
  }
  DeletionTransform t{RationalMatrix::identity(bg.size()), RationalMatrix::identity(bg.size())};
  for (auto sibling : bg.incoming(v)) {
    if (sibling == bond) continue;
    t.forward(sibling, bond) = 1;
    t.inverse(sibling, bond) = -1;
  }
  return t;
}

ReducedSystem apply_reduction(const MetricGraph& g, const BondGraph& bg, const RationalMatrix& s,
                              const ReductionPlan& plan) {
  ReducedSystem out;
  out.matrix = s;
  std::set<std::size_t> ghost_targets;
  std::set<std::size_t> used_vertices;

  for (std::size_t i = 0; i < plan.steps.size(); ++i) {
    const auto& step = plan.steps[i];
    if (step.bond >= bg.size()) throw Error(ErrorCode::kPreconditionViolated, "bond index out of range");
    if (bg.bond(step.bond).target != step.vertex) {
      throw Error(ErrorCode::kPreconditionViolated,
                  "bond " + bg.label(step.bond) + " does not end at vertex " + g.vertex(step.vertex).id);
    }
    if (ghost_targets.count(step.bond)) {
      throw Error(ErrorCode::kPlanConflict, "bond " + bg.label(step.bond) + " is the target of a ghost edge");
    }
    if (std::find(out.zero_columns.begin(), out.zero_columns.end(), step.bond) != out.zero_columns.end()) {
      throw Error(ErrorCode::kPreconditionViolated, "bond " + bg.label(step.bond) + " already deleted");
    }
    if (!used_vertices.insert(step.vertex).second) {
      throw Error(ErrorCode::kPreconditionViolated,
                  "vertex " + g.vertex(step.vertex).id + " already had a bond deleted");
    }

    const DeletionTransform t = deletion_transform(g, bg, step.bond);
    RationalMatrix next = t.inverse * out.matrix * t.forward;
    if (!next.column_is_zero(step.bond)) {
      throw Error(ErrorCode::kInternal, "deleted column " + bg.label(step.bond) + " is not zero");
    }
    for (std::size_t r = 0; r < next.rows(); ++r) {
      for (std::size_t c = 0; c < next.cols(); ++c) {
        if (c == step.bond) continue;
        Rational delta = next(r, c) - out.matrix(r, c);
        if (sgn(delta) != 0) {
          out.ghost_entries.push_back({r, c, delta, i});
          ghost_targets.insert(r);
        }
      }
    }
    out.matrix = std::move(next);
    out.zero_columns.push_back(step.bond);
  }
  return out;
}

bool verify_reduction(const RationalMatrix& s, const ReducedSystem& reduced) {
  if (s.rows() != reduced.matrix.rows() || s.cols() != reduced.matrix.cols()) return false;
  return charpoly_zS_minus_I(s) == charpoly_zS_minus_I(reduced.matrix);
}

ReductionPlan default_plan(const MetricGraph& g, const BondGraph& bg) {
  ReductionPlan plan;
  for (auto v : balanced_vertex_indices(g)) {
    if (!is_standard(g.vertex(v).coupling)) continue;
    const auto in = bg.incoming(v);
    if (!in.empty()) plan.steps.push_back({v, in.front()});
  }
  return plan;
}

ReductionPlan parse_plan(std::string_view json_text, const MetricGraph& g, const BondGraph& bg) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kParse, std::string("invalid plan JSON: ") + e.what());
  }
  if (doc.is_object() && doc.contains("steps")) doc = doc["steps"];
  if (!doc.is_array()) throw Error(ErrorCode::kParse, "plan must be an array of {vertex, bond}");
  ReductionPlan plan;
  for (const auto& item : doc) {
    if (!item.is_object() || !item.contains("vertex") || !item.contains("bond") ||
        !item["vertex"].is_string() || !item["bond"].is_string()) {
      throw Error(ErrorCode::kParse, "plan entries need string fields 'vertex' and 'bond'");
    }
    const auto vid = item["vertex"].get<std::string>();
    const auto label = item["bond"].get<std::string>();
    auto v = g.vertex_index(vid);
    if (!v) throw Error(ErrorCode::kParse, "plan names unknown vertex " + vid);
    auto b = bg.find(label);
    if (!b) throw Error(ErrorCode::kParse, "plan names unknown bond " + label);
    plan.steps.push_back({*v, *b});
  }
  return plan;
}

}  // namespace qgraph
