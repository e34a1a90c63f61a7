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

#include "qgraph/bond_graph.hpp"

#include <algorithm>
#include <utility>

#include "qgraph/errors.hpp"

namespace qgraph {

BondGraph::BondGraph(const MetricGraph& g) {
  const std::size_t n = g.edge_count();
  bonds_.resize(2 * n);
  arrival_port_.resize(2 * n);
  lengths_.resize(2 * n);
  labels_.resize(2 * n);
  for (std::size_t e = 0; e < n; ++e) {
    const auto from = g.from_vertex(e);
    const auto to = g.to_vertex(e);
    bonds_[e] = {e, false, from, to};
    bonds_[n + e] = {e, true, to, from};
    lengths_[e] = lengths_[n + e] = g.edge(e).length;
    labels_[e] = g.edge(e).id;
    labels_[n + e] = "^" + g.edge(e).id;
  }
  for (std::size_t b = 0; b < 2 * n; ++b) {
    const auto& bond = bonds_[b];
    const EdgeEnd end = bond.reversed ? EdgeEnd::kFrom : EdgeEnd::kTo;
    const auto& ports = g.ports(bond.target);
    auto it = std::find(ports.begin(), ports.end(), Port{bond.edge, end});
    arrival_port_[b] = static_cast<std::size_t>(it - ports.begin());
  }
}

std::vector<std::size_t> BondGraph::incoming(std::size_t v) const {
  std::vector<std::size_t> out;
  for (std::size_t b = 0; b < bonds_.size(); ++b)
    if (bonds_[b].target == v) out.push_back(b);
  return out;
}

std::vector<std::size_t> BondGraph::outgoing(std::size_t v) const {
  std::vector<std::size_t> out;
  for (std::size_t b = 0; b < bonds_.size(); ++b)
    if (bonds_[b].source == v) out.push_back(b);
  return out;
}

RationalMatrix BondGraph::q() const {
  RationalMatrix q(size(), size());
  for (std::size_t b = 0; b < size(); ++b) q(b, reversal(b)) = 1;
  return q;
}

std::optional<std::size_t> BondGraph::find(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

BondGraph build_bond_graph(const MetricGraph& g) {
  require_valid(g);
  return BondGraph(g);
}

BondMatrix BondMatrix::exact(RationalMatrix m) {
  BondMatrix bm;
  bm.n_ = m.rows();
  bm.support_ = support_of(m);
  bm.exact_ = std::move(m);
  return bm;
}

BondMatrix BondMatrix::sampled(std::size_t n, Sampler sampler, Support support) {
  BondMatrix bm;
  bm.n_ = n;
  bm.sampler_ = std::move(sampler);
  bm.support_ = std::move(support);
  return bm;
}

Eigen::MatrixXcd BondMatrix::at(Complex k) const {
  if (exact_) return exact_->to_complex();
  return sampler_(k);
}

Support support_of(const RationalMatrix& m) {
  Support s(m.rows(), std::vector<bool>(m.cols(), false));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) s[r][c] = sgn(m(r, c)) != 0;
  return s;
}

namespace {

// One nonzero slot of the bond-space layout: matrix[row, col] takes
// sigma_vertex[port_row, port_col].
struct Slot {
  std::size_t row, col, vertex, port_row, port_col;
};

// Bonds a, b arriving at the same vertex couple through that vertex's
// scattering matrix. With Q applied, row a moves to row reversal(a).
std::vector<Slot> layout(const MetricGraph& g, const BondGraph& bg, bool apply_q) {
  std::vector<Slot> slots;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const auto in = bg.incoming(v);
    for (auto a : in)
      for (auto b : in)
        slots.push_back({apply_q ? bg.reversal(a) : a, b, v, bg.arrival_port(a), bg.arrival_port(b)});
  }
  return slots;
}

template <typename ScatteringFn>
BondMatrix assemble(const MetricGraph& g, const BondGraph& bg, bool apply_q, ScatteringFn&& scattering) {
  const std::size_t size = bg.size();
  std::vector<VertexScattering> vs;
  bool all_exact = true;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    vs.push_back(scattering(v));
    all_exact = all_exact && vs.back().is_exact();
  }
  std::vector<Slot> slots = layout(g, bg, apply_q);

  if (all_exact) {
    RationalMatrix m(size, size);
    for (const auto& s : slots) m(s.row, s.col) = vs[s.vertex].exact_matrix()(s.port_row, s.port_col);
    return BondMatrix::exact(std::move(m));
  }

  auto sampler = [size, slots, vs](Complex k) {
    const auto n = static_cast<Eigen::Index>(size);
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
    std::vector<Eigen::MatrixXcd> sigma;
    sigma.reserve(vs.size());
    for (const auto& v : vs) sigma.push_back(v.at(k));
    for (const auto& s : slots) {
      m(static_cast<Eigen::Index>(s.row), static_cast<Eigen::Index>(s.col)) =
          sigma[s.vertex](static_cast<Eigen::Index>(s.port_row), static_cast<Eigen::Index>(s.port_col));
    }
    return m;
  };
  // Support is the nonzero pattern at a generic probe.
  const Eigen::MatrixXcd probe = sampler(Complex(0.7, 0.3));
  Support support(size, std::vector<bool>(size, false));
  for (std::size_t r = 0; r < size; ++r)
    for (std::size_t c = 0; c < size; ++c)
      support[r][c] = std::abs(probe(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c))) > 1e-14;
  return BondMatrix::sampled(size, std::move(sampler), std::move(support));
}

}  // namespace

BondMatrix assemble_sigma(const MetricGraph& g, const BondGraph& bg) {
  require_valid(g);
  return assemble(g, bg, false, [&](std::size_t v) { return vertex_scattering(g, v); });
}

BondMatrix bond_scattering(const MetricGraph& g) {
  const BondGraph bg = build_bond_graph(g);
  return assemble(g, bg, true, [&](std::size_t v) { return vertex_scattering(g, v); });
}

RationalMatrix exact_bond_scattering(const MetricGraph& g) {
  require_valid(g);
  const BondGraph bg(g);
  BondMatrix m = assemble(g, bg, true, [&](std::size_t v) {
    VertexScattering vs = vertex_scattering(g, v);
    if (vs.is_exact()) return vs;
    if (!detect_k_independence(vs)) {
      throw Error(ErrorCode::kKDependentCoupling, "vertex " + vs.vertex_id() + " scattering depends on k");
    }
    auto exact = rationalize(vs.at(kProbeWavenumbers[0]));
    if (!exact) {
      throw Error(ErrorCode::kNotExact, "vertex " + vs.vertex_id() + " scattering is not a small-denominator rational matrix");
    }
    return VertexScattering::exact(vs.vertex_id(), std::move(*exact));
  });
  return m.exact_matrix();
}

}  // namespace qgraph
