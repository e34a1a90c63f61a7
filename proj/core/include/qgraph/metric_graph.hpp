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

#include <Eigen/Dense>

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "qgraph/rational.hpp"

namespace qgraph {

/// Continuity plus vanishing sum of outgoing derivatives.
struct StandardCoupling {};

/// Function vanishes at the vertex (U = -1); degree-1 vertices only.
struct DirichletCoupling {};

/// Arbitrary unitary U. Rows and columns are ordered as the vertex ports:
/// internal edge-ends first (see MetricGraph::ports), then the leads.
struct GeneralCoupling {
  Eigen::MatrixXcd unitary;
};

using CouplingSpec = std::variant<StandardCoupling, DirichletCoupling, GeneralCoupling>;

struct VertexSpec {
  std::string id;
  int leads = 0;
  CouplingSpec coupling = StandardCoupling{};
};

struct InternalEdge {
  std::string id;
  std::string from;
  std::string to;
  Rational length;
};

enum class EdgeEnd { kFrom, kTo };

/// One internal edge-end attached to a vertex.
struct Port {
  std::size_t edge = 0;
  EdgeEnd end = EdgeEnd::kFrom;

  friend bool operator==(const Port&, const Port&) = default;
};

/// Metric graph with semi-infinite leads. Immutable once constructed;
/// construction never throws on inadmissible data, validate_graph reports it.
class MetricGraph {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  MetricGraph() = default;
  MetricGraph(std::vector<VertexSpec> vertices, std::vector<InternalEdge> edges);

  const std::vector<VertexSpec>& vertices() const noexcept { return vertices_; }
  const std::vector<InternalEdge>& edges() const noexcept { return edges_; }
  const VertexSpec& vertex(std::size_t v) const { return vertices_.at(v); }
  const InternalEdge& edge(std::size_t e) const { return edges_.at(e); }

  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  /// N, the number of internal edges.
  std::size_t edge_count() const noexcept { return edges_.size(); }
  /// M, the total number of leads.
  std::size_t lead_count() const noexcept;

  std::optional<std::size_t> vertex_index(const std::string& id) const;
  /// Vertex index of an edge's endpoint, npos if it names no vertex.
  std::size_t from_vertex(std::size_t e) const { return endpoints_.at(e).first; }
  std::size_t to_vertex(std::size_t e) const { return endpoints_.at(e).second; }

  /// Internal edge-ends at v in edge order; a loop contributes its from-end
  /// then its to-end.
  const std::vector<Port>& ports(std::size_t v) const { return ports_.at(v); }
  std::size_t internal_degree(std::size_t v) const { return ports_.at(v).size(); }
  std::size_t degree(std::size_t v) const;

  Rational volume() const;

 private:
  std::vector<VertexSpec> vertices_;
  std::vector<InternalEdge> edges_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<std::pair<std::size_t, std::size_t>> endpoints_;
  std::vector<std::vector<Port>> ports_;
};

struct Violation {
  std::string kind;     // e.g. "nonpositive length", "matrix not unitary"
  std::string subject;  // vertex or edge id
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const noexcept { return violations.empty(); }
  bool has(const std::string& kind) const;
};

ValidationReport validate_graph(const MetricGraph& g);

/// Throws Error(kInvalidGraph) listing the first violation.
void require_valid(const MetricGraph& g);

bool is_balanced(const MetricGraph& g, std::size_t v);

/// Ids of vertices whose internal edge-end count equals their lead count.
std::vector<std::string> balanced_vertices(const MetricGraph& g);
std::vector<std::size_t> balanced_vertex_indices(const MetricGraph& g);

/// Two vertices neighbor each other when an internal edge joins them.
bool are_neighbors(const MetricGraph& g, std::size_t a, std::size_t b);

struct StructuralFlags {
  bool equilateral = false;
  std::optional<Rational> common_length;
  bool has_loops = false;
  bool has_parallel_edges = false;
  std::size_t balanced_nonneighbor_count = 0;

  friend bool operator==(const StructuralFlags&, const StructuralFlags&) = default;
};

StructuralFlags structural_flags(const MetricGraph& g);

bool is_standard(const CouplingSpec& c);
bool is_dirichlet(const CouplingSpec& c);
bool is_general(const CouplingSpec& c);

}  // namespace qgraph
