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

#include <benchmark/benchmark.h>

#include "qgraph/bond_graph.hpp"
#include "qgraph/metric_graph.hpp"
#include "qgraph/polynomial.hpp"
#include "qgraph/pseudo_orbits.hpp"
#include "qgraph/rational_matrix.hpp"
#include "qgraph/reduction.hpp"
#include "qgraph/roots.hpp"

namespace {

using namespace qgraph;

// Complete graph on n vertices with n - 1 leads per vertex (all balanced).
MetricGraph complete_graph(int n) {
  std::vector<VertexSpec> vertices;
  for (int v = 0; v < n; ++v) vertices.push_back({"v" + std::to_string(v), n - 1, StandardCoupling{}});
  std::vector<InternalEdge> edges;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      edges.push_back({std::to_string(edges.size() + 1), vertices[a].id, vertices[b].id, Rational(1)});
  return MetricGraph(std::move(vertices), std::move(edges));
}

void BM_Charpoly(benchmark::State& state) {
  const RationalMatrix s = exact_bond_scattering(complete_graph(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(charpoly_zS_minus_I(s));
  state.counters["bonds"] = static_cast<double>(s.rows());
}
BENCHMARK(BM_Charpoly)->DenseRange(3, 6);

void BM_DetRank(benchmark::State& state) {
  const RationalMatrix s = exact_bond_scattering(complete_graph(static_cast<int>(state.range(0))));
  const RationalMatrix s2 = s * s;
  for (auto _ : state) benchmark::DoNotOptimize(det_rank(s2));
}
BENCHMARK(BM_DetRank)->DenseRange(3, 6);

void BM_CyclesK4(benchmark::State& state) {
  const RationalMatrix s = exact_bond_scattering(complete_graph(4));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_cycles(s));
}
BENCHMARK(BM_CyclesK4);

void BM_ExpansionK4(benchmark::State& state) {
  const RationalMatrix s = exact_bond_scattering(complete_graph(4));
  for (auto _ : state) benchmark::DoNotOptimize(expansion_polynomial(s));
}
BENCHMARK(BM_ExpansionK4)->Unit(benchmark::kMillisecond);

void BM_Roots(benchmark::State& state) {
  const RationalPolynomial p = charpoly_zS_minus_I(exact_bond_scattering(complete_graph(static_cast<int>(state.range(0)))));
  for (auto _ : state) benchmark::DoNotOptimize(roots(p));
  state.counters["degree"] = p.degree();
}
BENCHMARK(BM_Roots)->DenseRange(3, 6);

void BM_FullReductionK5(benchmark::State& state) {
  const MetricGraph g = complete_graph(5);
  const BondGraph bg = build_bond_graph(g);
  const RationalMatrix s = exact_bond_scattering(g);
  const ReductionPlan plan = default_plan(g, bg);
  for (auto _ : state) benchmark::DoNotOptimize(apply_reduction(g, bg, s, plan));
}
BENCHMARK(BM_FullReductionK5);

}  // namespace

BENCHMARK_MAIN();
