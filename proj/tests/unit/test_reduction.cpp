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

#include <gtest/gtest.h>

#include <random>

#include "golden.hpp"
#include "random_graphs.hpp"
#include "qgraph/bond_graph.hpp"
#include "qgraph/errors.hpp"
#include "qgraph/pseudo_orbits.hpp"
#include "qgraph/reduction.hpp"

namespace qgraph {
namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kInternal;
}

ReductionPlan plan_of(const MetricGraph& g, const BondGraph& bg,
                      std::initializer_list<std::pair<const char*, const char*>> steps) {
  ReductionPlan plan;
  for (auto [v, b] : steps) plan.steps.push_back({*g.vertex_index(v), *bg.find(b)});
  return plan;
}

TEST(DeletionTransform, SquareDiagonalFirstStep) {
  const MetricGraph g = testing::square_diagonal();
  const BondGraph bg = build_bond_graph(g);
  const DeletionTransform t = deletion_transform(g, bg, *bg.find("^1"));
  RationalMatrix v = RationalMatrix::identity(10);
  v(*bg.find("4"), *bg.find("^1")) = 1;
  EXPECT_EQ(t.forward, v);
  EXPECT_EQ(t.forward * t.inverse, RationalMatrix::identity(10));
}

TEST(DeletionTransform, InverseOnRandomGraphs) {
  std::mt19937 rng(61);
  testing::RandomGraphOptions options;
  options.simple = true;
  options.max_edges = 5;
  for (int trial = 0; trial < 40; ++trial) {
    const MetricGraph g = testing::random_equilateral_graph(rng, options);
    const BondGraph bg = build_bond_graph(g);
    for (auto v : balanced_vertex_indices(g))
      for (auto b : bg.incoming(v)) {
        const DeletionTransform t = deletion_transform(g, bg, b);
        EXPECT_EQ(t.forward * t.inverse, RationalMatrix::identity(bg.size()));
      }
  }
}

TEST(DeletionTransform, Preconditions) {
  const MetricGraph sq = testing::square_diagonal();
  const BondGraph bg = build_bond_graph(sq);
  const MetricGraph star = testing::star3();
  const BondGraph sbg = build_bond_graph(star);
  // ^1 ends at the Dirichlet leaf v1.
  EXPECT_EQ(code_of([&] { deletion_transform(star, sbg, *sbg.find("^1")); }), ErrorCode::kPreconditionViolated);
  const MetricGraph parallel({{"a", 2}, {"b", 2}}, {{"1", "a", "b", Rational(1)}, {"2", "a", "b", Rational(1)}});
  EXPECT_EQ(code_of([&] { deletion_transform(parallel, build_bond_graph(parallel), 0); }),
            ErrorCode::kPreconditionViolated);
  const MetricGraph uneven({{"a", 1}, {"b", 1}, {"c", 1}},
                           {{"1", "a", "b", Rational(1)}, {"2", "b", "c", Rational(2)}});
  EXPECT_EQ(code_of([&] { deletion_transform(uneven, build_bond_graph(uneven), 0); }),
            ErrorCode::kPreconditionViolated);
  (void)bg;
}

TEST(ApplyReduction, SquareDiagonalFullPlan) {
  const MetricGraph g = testing::square_diagonal();
  const BondGraph bg = build_bond_graph(g);
  const RationalMatrix s = exact_bond_scattering(g);
  const ReducedSystem r = apply_reduction(g, bg, s, plan_of(g, bg, {{"v1", "^1"}, {"v2", "^2"}, {"v3", "^3"}, {"v4", "^4"}}));
  EXPECT_EQ(r.matrix, testing::parse_table(testing::kSquareDiagonalReduced));
  EXPECT_TRUE(verify_reduction(s, r));
  for (auto b : r.zero_columns) EXPECT_TRUE(r.matrix.column_is_zero(b));
  // First step: three ghost entries in row 4, from bonds 1, 5 and ^2.
  std::vector<std::pair<std::string, std::string>> first;
  for (const auto& e : r.ghost_entries)
    if (e.step == 0) first.emplace_back(bg.label(e.row), bg.label(e.column));
  EXPECT_EQ(first, (std::vector<std::pair<std::string, std::string>>{{"4", "1"}, {"4", "5"}, {"4", "^2"}}));
}

TEST(ApplyReduction, GhostEntriesFollowStructure) {
  const MetricGraph g = testing::k4();
  const BondGraph bg = build_bond_graph(g);
  const RationalMatrix s = exact_bond_scattering(g);
  const ReductionPlan plan = default_plan(g, bg);
  const ReducedSystem r = apply_reduction(g, bg, s, plan);
  for (const auto& e : r.ghost_entries) {
    const std::size_t deleted = plan.steps[e.step].bond;
    EXPECT_EQ(bg.bond(e.row).target, bg.bond(deleted).target);
    EXPECT_NE(e.row, deleted);
    EXPECT_EQ(bg.bond(e.column).target, bg.bond(deleted).source);
  }
  EXPECT_TRUE(verify_reduction(s, r));
}

TEST(ApplyReduction, StarDeleteBondThree) {
  const MetricGraph g = testing::star3();
  const BondGraph bg = build_bond_graph(g);
  const RationalMatrix s = exact_bond_scattering(g);
  const ReducedSystem r = apply_reduction(g, bg, s, plan_of(g, bg, {{"c", "3"}}));
  const OrbitReport report = orbit_report(r.matrix, OrbitOptions{});
  EXPECT_FALSE(report.by_bond_count().contains(6));
  EXPECT_EQ(expansion_polynomial(r.matrix), RationalPolynomial({1, 0, -2, 0, 1}));
}

TEST(ApplyReduction, EmptyPlan) {
  const MetricGraph g = testing::k4();
  const BondGraph bg = build_bond_graph(g);
  const RationalMatrix s = exact_bond_scattering(g);
  const ReducedSystem r = apply_reduction(g, bg, s, ReductionPlan{});
  EXPECT_EQ(r.matrix, s);
  EXPECT_TRUE(r.ghost_entries.empty());
}

TEST(ApplyReduction, PlanErrors) {
  const MetricGraph g = testing::square_diagonal();
  const BondGraph bg = build_bond_graph(g);
  const RationalMatrix s = exact_bond_scattering(g);
  // Deleting ^1 puts ghost entries into row 4, which also ends at v1.
  EXPECT_EQ(code_of([&] { apply_reduction(g, bg, s, plan_of(g, bg, {{"v1", "^1"}, {"v1", "4"}})); }),
            ErrorCode::kPlanConflict);
  EXPECT_EQ(code_of([&] { apply_reduction(g, bg, s, plan_of(g, bg, {{"v2", "^1"}})); }),
            ErrorCode::kPreconditionViolated);
  EXPECT_EQ(code_of([&] { apply_reduction(g, bg, s, plan_of(g, bg, {{"v1", "^1"}, {"v1", "^1"}})); }),
            ErrorCode::kPreconditionViolated);
}

TEST(VerifyReduction, DetectsCorruption) {
  const MetricGraph g = testing::square_diagonal();
  const BondGraph bg = build_bond_graph(g);
  const RationalMatrix s = exact_bond_scattering(g);
  ReducedSystem r = apply_reduction(g, bg, s, default_plan(g, bg));
  EXPECT_TRUE(verify_reduction(s, r));
  r.matrix(0, 0) += ratio(1, 7);  // changes the trace, hence the z coefficient
  EXPECT_FALSE(verify_reduction(s, r));
}

TEST(VerifyReduction, RandomPlans) {
  std::mt19937 rng(67);
  testing::RandomGraphOptions options;
  options.simple = true;
  options.max_edges = 5;
  int nontrivial = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const MetricGraph g = testing::random_equilateral_graph(rng, options);
    const BondGraph bg = build_bond_graph(g);
    const RationalMatrix s = exact_bond_scattering(g);
    const ReductionPlan plan = testing::random_plan(g, bg, rng);
    nontrivial += plan.steps.empty() ? 0 : 1;
    EXPECT_TRUE(verify_reduction(s, apply_reduction(g, bg, s, plan)));
  }
  EXPECT_GT(nontrivial, 10);
}

TEST(VerifyReduction, FullPlanZeroColumns) {
  std::mt19937 rng(71);
  testing::RandomGraphOptions options;
  options.simple = true;
  options.max_edges = 5;
  for (int trial = 0; trial < 40; ++trial) {
    const MetricGraph g = testing::random_equilateral_graph(rng, options);
    const BondGraph bg = build_bond_graph(g);
    const ReducedSystem r = apply_reduction(g, bg, exact_bond_scattering(g), default_plan(g, bg));
    std::size_t zero = 0;
    for (std::size_t c = 0; c < bg.size(); ++c) zero += r.matrix.column_is_zero(c) ? 1 : 0;
    EXPECT_GE(zero, balanced_vertex_indices(g).size());
  }
}

TEST(ParsePlan, LabelsAndErrors) {
  const MetricGraph g = testing::square_diagonal();
  const BondGraph bg = build_bond_graph(g);
  const ReductionPlan plan = parse_plan(R"([{"vertex": "v1", "bond": "^1"}, {"vertex": "v2", "bond": "^2"}])", g, bg);
  ASSERT_EQ(plan.steps.size(), 2u);
  EXPECT_EQ(plan.steps[1].bond, *bg.find("^2"));
  EXPECT_EQ(parse_plan(R"({"steps": []})", g, bg).steps.size(), 0u);
  EXPECT_EQ(code_of([&] { parse_plan(R"([{"vertex": "zz", "bond": "^1"}])", g, bg); }), ErrorCode::kParse);
  EXPECT_EQ(code_of([&] { parse_plan("[", g, bg); }), ErrorCode::kParse);
}

}  // namespace
}  // namespace qgraph
