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

#include "golden.hpp"
#include "qgraph/errors.hpp"
#include "qgraph/graph_io.hpp"
#include "qgraph/metric_graph.hpp"

namespace qgraph {
namespace {

TEST(Validate, GoldenGraphsAreValid) {
  for (const auto& g : {testing::star3(), testing::square_diagonal(), testing::k4(), testing::dirichlet_interval()})
    EXPECT_TRUE(validate_graph(g).ok());
}

TEST(Validate, ZeroLength) {
  const MetricGraph g({{"a", 1}, {"b", 1}}, {{"e", "a", "b", Rational(0)}});
  const auto report = validate_graph(g);
  EXPECT_TRUE(report.has("nonpositive length"));
  EXPECT_THROW(require_valid(g), Error);
}

TEST(Validate, NonUnitaryCoupling) {
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(2, 2);
  u(0, 0) = 1;
  u(1, 1) = 2;
  const MetricGraph g({{"a", 1, GeneralCoupling{u}}, {"b", 1}}, {{"e", "a", "b", Rational(1)}});
  EXPECT_TRUE(validate_graph(g).has("matrix not unitary"));
}

TEST(Validate, StructuralViolations) {
  const MetricGraph dup({{"a", 0}, {"a", 0}}, {{"e", "a", "a", Rational(1)}});
  EXPECT_TRUE(validate_graph(dup).has("duplicate vertex id"));
  const MetricGraph unknown({{"a", 0}}, {{"e", "a", "zz", Rational(1)}});
  EXPECT_TRUE(validate_graph(unknown).has("unknown vertex"));
  const MetricGraph negative({{"a", -1}, {"b", 0}}, {{"e", "a", "b", Rational(1)}});
  EXPECT_TRUE(validate_graph(negative).has("negative lead count"));
  const MetricGraph isolated({{"a", 0}, {"b", 0}, {"c", 0}}, {{"e", "a", "b", Rational(1)}});
  EXPECT_TRUE(validate_graph(isolated).has("isolated vertex"));
  const MetricGraph dirichlet({{"a", 1, DirichletCoupling{}}, {"b", 0}}, {{"e", "a", "b", Rational(1)}});
  EXPECT_TRUE(validate_graph(dirichlet).has("dirichlet at degree != 1"));
  const MetricGraph size({{"a", 1, GeneralCoupling{Eigen::MatrixXcd::Identity(3, 3)}}, {"b", 0}},
                         {{"e", "a", "b", Rational(1)}});
  EXPECT_TRUE(validate_graph(size).has("matrix size mismatch"));
}

TEST(Balanced, GoldenGraphs) {
  EXPECT_EQ(balanced_vertices(testing::star3()), std::vector<std::string>{"c"});
  EXPECT_EQ(balanced_vertices(testing::k4()), (std::vector<std::string>{"A", "B", "C", "D"}));
  EXPECT_EQ(balanced_vertices(testing::square_diagonal()), (std::vector<std::string>{"v1", "v2", "v3", "v4"}));
}

TEST(Balanced, NoLeadsNoBalancedVertex) {
  const MetricGraph g({{"a", 0}, {"b", 0}, {"c", 0}},
                      {{"1", "a", "b", Rational(1)}, {"2", "b", "c", Rational(1)}, {"3", "c", "a", Rational(1)}});
  EXPECT_TRUE(balanced_vertices(g).empty());
}

TEST(StructuralFlags, SquareDiagonal) {
  const StructuralFlags f = structural_flags(testing::square_diagonal());
  EXPECT_TRUE(f.equilateral);
  ASSERT_TRUE(f.common_length);
  EXPECT_EQ(*f.common_length, Rational(1));
  EXPECT_FALSE(f.has_loops);
  EXPECT_FALSE(f.has_parallel_edges);
  EXPECT_EQ(f.balanced_nonneighbor_count, 0u);
}

TEST(StructuralFlags, ParallelEdgesAndLoops) {
  const MetricGraph g({{"a", 0}, {"b", 0}},
                      {{"1", "a", "b", Rational(1)}, {"2", "b", "a", Rational(1)}, {"3", "a", "a", Rational(1)}});
  const StructuralFlags f = structural_flags(g);
  EXPECT_TRUE(f.has_parallel_edges);
  EXPECT_TRUE(f.has_loops);
}

TEST(StructuralFlags, PathWithIsolatedBalancedVertex) {
  // a - b - c - d, only b balanced (2 internal, 2 leads).
  const MetricGraph g({{"a", 0}, {"b", 2}, {"c", 0}, {"d", 0}},
                      {{"1", "a", "b", Rational(1)}, {"2", "b", "c", Rational(1)}, {"3", "c", "d", Rational(1)}});
  EXPECT_EQ(structural_flags(g).balanced_nonneighbor_count, 1u);
}

TEST(StructuralFlags, NonEquilateral) {
  const MetricGraph g({{"a", 0}, {"b", 0}}, {{"1", "a", "b", Rational(1)}, {"2", "a", "b", Rational(2)}});
  const StructuralFlags f = structural_flags(g);
  EXPECT_FALSE(f.equilateral);
  EXPECT_FALSE(f.common_length);
}

TEST(GraphIo, RoundTrip) {
  const MetricGraph g = testing::square_diagonal(ratio(3, 2));
  const MetricGraph back = parse_graph(dump_graph(g));
  ASSERT_EQ(back.vertex_count(), g.vertex_count());
  ASSERT_EQ(back.edge_count(), g.edge_count());
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    EXPECT_EQ(back.edge(e).length, ratio(3, 2));
    EXPECT_EQ(back.edge(e).from, g.edge(e).from);
  }
  EXPECT_EQ(balanced_vertices(back), balanced_vertices(g));
}

TEST(GraphIo, SchemaDefaultsAndUnitaryEntries) {
  const MetricGraph g = parse_graph(R"({
    "vertices": [{"id": "a"}, {"id": "b", "leads": 1,
                  "coupling": {"unitary": [[0, 1], [{"re": 1, "im": 0}, 0]]}}],
    "edges": [{"id": "e", "from": "a", "to": "b", "length": "0.5"}]})");
  EXPECT_TRUE(is_standard(g.vertex(0).coupling));
  EXPECT_TRUE(is_general(g.vertex(1).coupling));
  EXPECT_EQ(g.edge(0).length, ratio(1, 2));
  EXPECT_TRUE(validate_graph(g).ok());
}

TEST(GraphIo, MalformedInputIsParseError) {
  for (const char* bad : {"{", "[]", R"({"vertices": 3})", R"({"vertices": [{"leads": 1}]})",
                          R"({"vertices": [{"id": "a"}], "edges": [{"id": "e", "from": "a", "to": "a"}]})",
                          R"({"vertices": [{"id": "a", "coupling": "robin"}]})"}) {
    try {
      parse_graph(bad);
      ADD_FAILURE() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kParse) << bad;
    }
  }
}

}  // namespace
}  // namespace qgraph
