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
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qgraph/coupling.hpp"
#include "qgraph/metric_graph.hpp"
#include "qgraph/rational_matrix.hpp"

namespace qgraph {

/// Directed copy of an internal edge. Bond j < N runs along edge j in its
/// from -> to parametrization; bond N + j is its reversal.
struct Bond {
  std::size_t edge = 0;
  bool reversed = false;
  std::size_t source = 0;
  std::size_t target = 0;
};

/// The doubled directed graph with leads cut off.
class BondGraph {
 public:
  BondGraph() = default;
  explicit BondGraph(const MetricGraph& g);

  std::size_t size() const noexcept { return bonds_.size(); }
  std::size_t edge_count() const noexcept { return bonds_.size() / 2; }
  const std::vector<Bond>& bonds() const noexcept { return bonds_; }
  const Bond& bond(std::size_t b) const { return bonds_.at(b); }

  std::size_t reversal(std::size_t b) const { return b < edge_count() ? b + edge_count() : b - edge_count(); }

  /// Port index at the bond's target through which it arrives.
  std::size_t arrival_port(std::size_t b) const { return arrival_port_.at(b); }
  /// Port index at the bond's source through which it departs.
  std::size_t departure_port(std::size_t b) const { return arrival_port_.at(reversal(b)); }

  /// Bonds ending at vertex v, in bond order.
  std::vector<std::size_t> incoming(std::size_t v) const;
  std::vector<std::size_t> outgoing(std::size_t v) const;

  /// Diagonal of L: bond lengths (bond and reversal share the edge length).
  const std::vector<Rational>& lengths() const noexcept { return lengths_; }

  /// Block anti-diagonal swap [[0, I_N], [I_N, 0]].
  RationalMatrix q() const;

  /// "e1" for a forward bond, "^e1" for its reversal.
  std::string label(std::size_t b) const { return labels_.at(b); }
  std::optional<std::size_t> find(const std::string& label) const;

 private:
  std::vector<Bond> bonds_;
  std::vector<std::size_t> arrival_port_;
  std::vector<Rational> lengths_;
  std::vector<std::string> labels_;
};

BondGraph build_bond_graph(const MetricGraph& g);

/// Structural nonzero pattern: support[row][col].
using Support = std::vector<std::vector<bool>>;

/// A 2N x 2N bond-space matrix, exact when every vertex scattering is.
class BondMatrix {
 public:
  using Sampler = std::function<Eigen::MatrixXcd(Complex)>;

  static BondMatrix exact(RationalMatrix m);
  static BondMatrix sampled(std::size_t n, Sampler sampler, Support support);

  bool is_exact() const noexcept { return exact_.has_value(); }
  const RationalMatrix& exact_matrix() const { return *exact_; }
  std::size_t size() const noexcept { return n_; }
  Eigen::MatrixXcd at(Complex k) const;
  const Support& support() const noexcept { return support_; }

 private:
  std::size_t n_ = 0;
  std::optional<RationalMatrix> exact_;
  Sampler sampler_;
  Support support_;
};

/// Effective scattering in bond basis: entry [a, b] for bonds a, b arriving
/// at the same vertex v is sigma_v[arrival port of a, arrival port of b].
BondMatrix assemble_sigma(const MetricGraph& g, const BondGraph& bg);

/// S = Q * Sigma. S[out, in] is the amplitude for in -> out through the
/// vertex where `in` ends and `out` starts.
BondMatrix bond_scattering(const MetricGraph& g);

/// Exact S, also for general couplings that are k-independent and whose
/// scattering entries are recognisably rational.
/// Throws Error(kKDependentCoupling) or Error(kNotExact).
RationalMatrix exact_bond_scattering(const MetricGraph& g);

Support support_of(const RationalMatrix& m);

}  // namespace qgraph
