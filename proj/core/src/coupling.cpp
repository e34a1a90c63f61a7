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

#include "qgraph/coupling.hpp"

#include <cmath>
#include <utility>

#include "qgraph/errors.hpp"

namespace qgraph {

CouplingBlocks CouplingBlocks::split(const Eigen::MatrixXcd& u, Eigen::Index internal) {
  const Eigen::Index d = u.rows();
  const Eigen::Index m = d - internal;
  CouplingBlocks b;
  b.u1 = u.topLeftCorner(internal, internal);
  b.u2 = u.topRightCorner(internal, m);
  b.u3 = u.bottomLeftCorner(m, internal);
  b.u4 = u.bottomRightCorner(m, m);
  return b;
}

Eigen::MatrixXcd CouplingBlocks::assembled() const {
  const Eigen::Index n = internal();
  const Eigen::Index m = leads();
  Eigen::MatrixXcd u(n + m, n + m);
  u.topLeftCorner(n, n) = u1;
  u.topRightCorner(n, m) = u2;
  u.bottomLeftCorner(m, n) = u3;
  u.bottomRightCorner(m, m) = u4;
  return u;
}

RationalMatrix standard_unitary(std::size_t d) {
  RationalMatrix u(d, d);
  const Rational off = ratio(2, static_cast<long>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) u(i, j) = i == j ? Rational(off - 1) : off;
  return u;
}

Eigen::MatrixXcd solve_checked(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  const Eigen::Index n = a.rows();
  if (a.cols() != n || b.rows() != n) throw Error(ErrorCode::kInternal, "solve_checked shape mismatch");
  if (n == 0) return Eigen::MatrixXcd(0, b.cols());

  const double threshold = 1e-12 * a.rowwise().norm().maxCoeff();
  Eigen::MatrixXcd lu = a;
  Eigen::MatrixXcd x = b;
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = col;
    lu.col(col).tail(n - col).cwiseAbs().maxCoeff(&pivot);
    pivot += col;
    if (!(std::abs(lu(pivot, col)) > threshold)) {
      throw Error(ErrorCode::kSingularPivot, "pivot " + std::to_string(std::abs(lu(pivot, col))) +
                                                 " below tolerance in column " + std::to_string(col));
    }
    if (pivot != col) {
      lu.row(pivot).swap(lu.row(col));
      x.row(pivot).swap(x.row(col));
    }
    for (Eigen::Index r = col + 1; r < n; ++r) {
      const Complex f = lu(r, col) / lu(col, col);
      if (f == Complex(0)) continue;
      lu.row(r).tail(n - col) -= f * lu.row(col).tail(n - col);
      x.row(r) -= f * x.row(col);
    }
  }
  for (Eigen::Index r = n - 1; r >= 0; --r) {
    x.row(r) -= lu.row(r).tail(n - r - 1) * x.bottomRows(n - r - 1);
    x.row(r) /= lu(r, r);
  }
  return x;
}

Eigen::MatrixXcd effective_coupling(const CouplingBlocks& blocks, Complex k) {
  if (blocks.leads() == 0) return blocks.u1;
  const Eigen::Index m = blocks.leads();
  const Eigen::MatrixXcd inner =
      (1.0 - k) * blocks.u4 - (1.0 + k) * Eigen::MatrixXcd::Identity(m, m);
  return blocks.u1 - (1.0 - k) * blocks.u2 * solve_checked(inner, blocks.u3);
}

Eigen::MatrixXcd effective_vertex_scattering(const CouplingBlocks& blocks, Complex k) {
  const Eigen::Index n = blocks.internal();
  const Eigen::MatrixXcd ueff = effective_coupling(blocks, k);
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(n, n);
  return -solve_checked((1.0 - k) * ueff - (1.0 + k) * id, (1.0 + k) * ueff - (1.0 - k) * id);
}

Eigen::MatrixXcd coupling_from_scattering(const Eigen::MatrixXcd& sigma, Complex k) {
  const Eigen::Index n = sigma.rows();
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(n, n);
  const Eigen::MatrixXcd left = (1.0 + k) * sigma + (1.0 - k) * id;
  const Eigen::MatrixXcd right = (1.0 - k) * sigma + (1.0 + k) * id;
  // X Y^{-1} = (Y^T^{-1} X^T)^T
  return solve_checked(right.transpose(), left.transpose()).transpose();
}

RationalMatrix standard_sigma(std::size_t n, std::size_t m) {
  RationalMatrix s(n, n);
  if (n == 0) return s;
  const Rational off = ratio(2, static_cast<long>(n + m));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) s(i, j) = i == j ? Rational(off - 1) : off;
  return s;
}

VertexScattering VertexScattering::exact(std::string vertex_id, RationalMatrix sigma) {
  VertexScattering vs;
  vs.vertex_id_ = std::move(vertex_id);
  vs.n_ = sigma.rows();
  vs.exact_ = std::move(sigma);
  return vs;
}

VertexScattering VertexScattering::sampled(std::string vertex_id, std::size_t n, Sampler sampler) {
  VertexScattering vs;
  vs.vertex_id_ = std::move(vertex_id);
  vs.n_ = n;
  vs.sampler_ = std::move(sampler);
  return vs;
}

Eigen::MatrixXcd VertexScattering::at(Complex k) const {
  if (exact_) return exact_->to_complex();
  return sampler_(k);
}

Eigen::MatrixXcd vertex_unitary(const MetricGraph& g, std::size_t v) {
  const auto& spec = g.vertex(v);
  const auto d = static_cast<Eigen::Index>(g.degree(v));
  if (is_standard(spec.coupling)) return standard_unitary(static_cast<std::size_t>(d)).to_complex();
  if (is_dirichlet(spec.coupling)) return -Eigen::MatrixXcd::Identity(d, d);
  return std::get<GeneralCoupling>(spec.coupling).unitary;
}

CouplingBlocks vertex_blocks(const MetricGraph& g, std::size_t v) {
  return CouplingBlocks::split(vertex_unitary(g, v), static_cast<Eigen::Index>(g.internal_degree(v)));
}

VertexScattering vertex_scattering(const MetricGraph& g, std::size_t v) {
  const auto& spec = g.vertex(v);
  const std::size_t n = g.internal_degree(v);
  if (is_standard(spec.coupling)) {
    return VertexScattering::exact(spec.id, standard_sigma(n, static_cast<std::size_t>(spec.leads)));
  }
  if (is_dirichlet(spec.coupling)) {
    RationalMatrix s(n, n);
    for (std::size_t i = 0; i < n; ++i) s(i, i) = -1;
    return VertexScattering::exact(spec.id, std::move(s));
  }
  CouplingBlocks blocks = vertex_blocks(g, v);
  return VertexScattering::sampled(spec.id, n, [blocks = std::move(blocks)](Complex k) {
    return effective_vertex_scattering(blocks, k);
  });
}

Eigen::MatrixXcd formula_vertex_scattering(const MetricGraph& g, std::size_t v, Complex k) {
  return effective_vertex_scattering(vertex_blocks(g, v), k);
}

bool detect_k_independence(const VertexScattering& scattering) {
  if (scattering.is_exact()) return true;
  const Eigen::MatrixXcd first = scattering.at(kProbeWavenumbers[0]);
  for (std::size_t i = 1; i < kProbeWavenumbers.size(); ++i) {
    const Eigen::MatrixXcd other = scattering.at(kProbeWavenumbers[i]);
    if (first.size() > 0 && (other - first).cwiseAbs().maxCoeff() >= 1e-10) return false;
  }
  return true;
}

namespace {

std::optional<Rational> rationalize_scalar(double x, double tolerance, long max_denominator) {
  // Convergents h/k of the continued fraction of x.
  long h_prev = 1, h = static_cast<long>(std::floor(x));
  long k_prev = 0, k = 1;
  double frac = x - std::floor(x);
  for (int iter = 0; iter < 64; ++iter) {
    if (std::abs(x - static_cast<double>(h) / static_cast<double>(k)) < tolerance) {
      return ratio(h, k);
    }
    if (frac < 1e-300) break;
    const double inv = 1.0 / frac;
    const long a = static_cast<long>(std::floor(inv));
    frac = inv - std::floor(inv);
    const long h_next = a * h + h_prev;
    const long k_next = a * k + k_prev;
    if (k_next > max_denominator) break;
    h_prev = h;
    h = h_next;
    k_prev = k;
    k = k_next;
  }
  return std::nullopt;
}

}  // namespace

std::optional<RationalMatrix> rationalize(const Eigen::MatrixXcd& m, double tolerance,
                                          long max_denominator) {
  RationalMatrix out(static_cast<std::size_t>(m.rows()), static_cast<std::size_t>(m.cols()));
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (std::abs(m(r, c).imag()) >= tolerance) return std::nullopt;
      auto q = rationalize_scalar(m(r, c).real(), tolerance, max_denominator);
      if (!q) return std::nullopt;
      out(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) = *q;
    }
  }
  return out;
}

}  // namespace qgraph
