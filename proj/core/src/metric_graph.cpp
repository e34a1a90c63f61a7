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

#include "qgraph/metric_graph.hpp"

#include <algorithm>
#include <set>

#include "qgraph/errors.hpp"

namespace qgraph {

MetricGraph::MetricGraph(std::vector<VertexSpec> vertices, std::vector<InternalEdge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  for (std::size_t v = 0; v < vertices_.size(); ++v) index_.emplace(vertices_[v].id, v);
  ports_.resize(vertices_.size());
  endpoints_.reserve(edges_.size());
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    auto from = vertex_index(edges_[e].from).value_or(npos);
    auto to = vertex_index(edges_[e].to).value_or(npos);
    endpoints_.emplace_back(from, to);
    if (from != npos) ports_[from].push_back({e, EdgeEnd::kFrom});
    if (to != npos) ports_[to].push_back({e, EdgeEnd::kTo});
  }
}

std::size_t MetricGraph::lead_count() const noexcept {
  std::size_t m = 0;
  for (const auto& v : vertices_) m += static_cast<std::size_t>(std::max(v.leads, 0));
  return m;
}

std::optional<std::size_t> MetricGraph::vertex_index(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t MetricGraph::degree(std::size_t v) const {
  return internal_degree(v) + static_cast<std::size_t>(std::max(vertices_.at(v).leads, 0));
}

Rational MetricGraph::volume() const {
  Rational total = 0;
  for (const auto& e : edges_) total += e.length;
  return total;
}

bool ValidationReport::has(const std::string& kind) const {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const Violation& v) { return v.kind == kind; });
}

bool is_standard(const CouplingSpec& c) { return std::holds_alternative<StandardCoupling>(c); }
bool is_dirichlet(const CouplingSpec& c) { return std::holds_alternative<DirichletCoupling>(c); }
bool is_general(const CouplingSpec& c) { return std::holds_alternative<GeneralCoupling>(c); }

ValidationReport validate_graph(const MetricGraph& g) {
  ValidationReport report;
  auto add = [&](std::string kind, std::string subject, std::string detail) {
    report.violations.push_back({std::move(kind), std::move(subject), std::move(detail)});
  };

  std::set<std::string> seen;
  for (const auto& v : g.vertices()) {
    if (!seen.insert(v.id).second) add("duplicate vertex id", v.id, "");
  }
  seen.clear();
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const auto& edge = g.edge(e);
    if (!seen.insert(edge.id).second) add("duplicate edge id", edge.id, "");
    if (g.from_vertex(e) == MetricGraph::npos) add("unknown vertex", edge.id, "from = " + edge.from);
    if (g.to_vertex(e) == MetricGraph::npos) add("unknown vertex", edge.id, "to = " + edge.to);
    if (sgn(edge.length) <= 0) add("nonpositive length", edge.id, to_string(edge.length));
  }

  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const auto& spec = g.vertex(v);
    if (spec.leads < 0) {
      add("negative lead count", spec.id, std::to_string(spec.leads));
      continue;
    }
    const std::size_t d = g.degree(v);
    if (d == 0) add("isolated vertex", spec.id, "degree 0");
    if (is_dirichlet(spec.coupling) && d != 1) {
      add("dirichlet at degree != 1", spec.id, "degree " + std::to_string(d));
    }
    if (const auto* general = std::get_if<GeneralCoupling>(&spec.coupling)) {
      const auto& u = general->unitary;
      if (static_cast<std::size_t>(u.rows()) != d || static_cast<std::size_t>(u.cols()) != d) {
        add("matrix size mismatch", spec.id,
            std::to_string(u.rows()) + "x" + std::to_string(u.cols()) + " for degree " +
                std::to_string(d));
      } else {
        const double err =
            (u * u.adjoint() - Eigen::MatrixXcd::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff();
        if (d > 0 && err > 1e-12) add("matrix not unitary", spec.id, "max |UU* - I| = " + std::to_string(err));
      }
    }
  }
  return report;
}

void require_valid(const MetricGraph& g) {
  auto report = validate_graph(g);
  if (!report.ok()) {
    const auto& v = report.violations.front();
    throw Error(ErrorCode::kInvalidGraph, v.kind + " (" + v.subject + ")");
  }
}

bool is_balanced(const MetricGraph& g, std::size_t v) {
  return static_cast<long>(g.internal_degree(v)) == g.vertex(v).leads;
}

std::vector<std::size_t> balanced_vertex_indices(const MetricGraph& g) {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (g.internal_degree(v) > 0 && is_balanced(g, v)) out.push_back(v);
  return out;
}

std::vector<std::string> balanced_vertices(const MetricGraph& g) {
  std::vector<std::string> out;
  for (auto v : balanced_vertex_indices(g)) out.push_back(g.vertex(v).id);
  return out;
}

bool are_neighbors(const MetricGraph& g, std::size_t a, std::size_t b) {
  for (const auto& port : g.ports(a)) {
    const std::size_t other =
        port.end == EdgeEnd::kFrom ? g.to_vertex(port.edge) : g.from_vertex(port.edge);
    if (other == b) return true;
  }
  return false;
}

StructuralFlags structural_flags(const MetricGraph& g) {
  StructuralFlags flags;
  flags.equilateral = true;
  for (const auto& e : g.edges()) {
    if (!flags.common_length) {
      flags.common_length = e.length;
    } else if (*flags.common_length != e.length) {
      flags.equilateral = false;
    }
  }
  if (!flags.equilateral) flags.common_length.reset();

  std::set<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    auto a = g.from_vertex(e);
    auto b = g.to_vertex(e);
    if (a == b) {
      flags.has_loops = true;
      continue;
    }
    if (!pairs.insert(std::minmax(a, b)).second) flags.has_parallel_edges = true;
  }

  const auto balanced = balanced_vertex_indices(g);
  for (auto v : balanced) {
    bool lonely = std::none_of(balanced.begin(), balanced.end(), [&](std::size_t w) {
      return w != v && are_neighbors(g, v, w);
    });
    if (lonely) ++flags.balanced_nonneighbor_count;
  }
  return flags;
}

}  // namespace qgraph
