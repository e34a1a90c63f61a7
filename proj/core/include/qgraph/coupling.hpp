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

#include <array>
#include <complex>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>

#include "qgraph/metric_graph.hpp"
#include "qgraph/rational_matrix.hpp"

namespace qgraph {

using Complex = std::complex<double>;

/// The vertex unitary split into internal (n) and lead (m) blocks:
/// U = [[u1, u2], [u3, u4]] with u1 n x n and u4 m x m.
struct CouplingBlocks {
  Eigen::MatrixXcd u1, u2, u3, u4;

  static CouplingBlocks split(const Eigen::MatrixXcd& u, Eigen::Index internal);

  Eigen::Index internal() const { return u1.rows(); }
  Eigen::Index leads() const { return u4.rows(); }
  Eigen::MatrixXcd assembled() const;
};

/// (2/d) J_d - I_d.
RationalMatrix standard_unitary(std::size_t d);

/// A^{-1} B by partial-pivot elimination. Throws Error(kSingularPivot) when
/// a pivot falls below 1e-12 times the largest row norm of A.
Eigen::MatrixXcd solve_checked(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);

/// U1 - (1-k) U2 [(1-k) U4 - (1+k) I]^{-1} U3; equals U1 when there are no leads.
Eigen::MatrixXcd effective_coupling(const CouplingBlocks& blocks, Complex k);

/// -[(1-k) Ueff - (1+k) I]^{-1} [(1+k) Ueff - (1-k) I].
Eigen::MatrixXcd effective_vertex_scattering(const CouplingBlocks& blocks, Complex k);

/// Inverse relation: [(1+k) sigma + (1-k) I] [(1-k) sigma + (1+k) I]^{-1}.
Eigen::MatrixXcd coupling_from_scattering(const Eigen::MatrixXcd& sigma, Complex k);

/// Exact (2/(n+m)) J_n - I_n, the k-independent standard-coupling result.
RationalMatrix standard_sigma(std::size_t n, std::size_t m);

/// Wavenumbers used to probe a sampled scattering matrix for k-dependence.
inline const std::array<Complex, 5> kProbeWavenumbers = {
    Complex(0.5, 0.0), Complex(1.3, 0.0), Complex(2.0, 1.0), Complex(-0.7, 0.2), Complex(3.1, -2.2)};

/// Effective vertex-scattering matrix of one vertex, indexed by its ports.
class VertexScattering {
 public:
  using Sampler = std::function<Eigen::MatrixXcd(Complex)>;

  static VertexScattering exact(std::string vertex_id, RationalMatrix sigma);
  static VertexScattering sampled(std::string vertex_id, std::size_t n, Sampler sampler);

  const std::string& vertex_id() const noexcept { return vertex_id_; }
  std::size_t size() const noexcept { return n_; }
  bool is_exact() const noexcept { return exact_.has_value(); }

  /// Only valid when is_exact().
  const RationalMatrix& exact_matrix() const { return *exact_; }

  Eigen::MatrixXcd at(Complex k) const;

 private:
  std::string vertex_id_;
  std::size_t n_ = 0;
  std::optional<RationalMatrix> exact_;
  Sampler sampler_;
};

/// Full vertex unitary in port order (standard and Dirichlet expanded).
Eigen::MatrixXcd vertex_unitary(const MetricGraph& g, std::size_t v);
CouplingBlocks vertex_blocks(const MetricGraph& g, std::size_t v);

/// Standard and Dirichlet vertices yield the exact kind; general couplings
/// yield a sampler over the effective-scattering formula.
VertexScattering vertex_scattering(const MetricGraph& g, std::size_t v);

/// Always evaluates the general formula, also for standard/Dirichlet.
Eigen::MatrixXcd formula_vertex_scattering(const MetricGraph& g, std::size_t v, Complex k);

/// True for exact kinds; otherwise compares samples at kProbeWavenumbers and
/// reports constancy when the max entrywise deviation is below 1e-10.
/// Heuristic for general couplings. Propagates SingularPivot.
bool detect_k_independence(const VertexScattering& scattering);

/// Recovers exact rationals from a numerically constant real matrix, entry by
/// entry via continued fractions (|x - p/q| < tolerance, q <= max_denominator).
std::optional<RationalMatrix> rationalize(const Eigen::MatrixXcd& m, double tolerance = 1e-12,
                                          long max_denominator = 1'000'000);

}  // namespace qgraph
