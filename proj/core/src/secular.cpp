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

#include "qgraph/secular.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qgraph/bond_graph.hpp"
#include "qgraph/coupling.hpp"
#include "qgraph/errors.hpp"

namespace qgraph {

SecularPolynomial secular_polynomial(const MetricGraph& g) {
  require_valid(g);
  const StructuralFlags flags = structural_flags(g);
  if (!flags.equilateral) throw Error(ErrorCode::kNotEquilateral, "edge lengths differ");
  const RationalMatrix s = exact_bond_scattering(g);
  SecularPolynomial out;
  out.poly = charpoly_zS_minus_I(s);
  out.ell = flags.common_length.value_or(Rational(0));
  out.bond_count = s.rows();
  return out;
}

WeylClass classify_weyl(const SecularPolynomial& p) {
  WeylClass w;
  w.verdict = p.degree() < p.bond_count ? WeylVerdict::kNonWeyl : WeylVerdict::kWeyl;
  w.effective_size = p.ell * static_cast<long>(p.degree()) / 2;
  w.volume = p.ell * static_cast<long>(p.bond_count) / 2;
  return w;
}

WeylClass classify_weyl(const MetricGraph& g) { return classify_weyl(secular_polynomial(g)); }

WeylVerdict classify_weyl_by_vertices(const MetricGraph& g) {
  require_valid(g);
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const VertexScattering vs = vertex_scattering(g, v);
    if (vs.size() == 0) continue;
    if (vs.is_exact()) {
      if (sgn(det_rank(vs.exact_matrix()).det) == 0) return WeylVerdict::kNonWeyl;
      continue;
    }
    bool always_singular = true;
    for (auto k : kProbeWavenumbers) {
      const Eigen::MatrixXcd m = vs.at(k);
      if (std::abs(m.determinant()) > 1e-10) {
        always_singular = false;
        break;
      }
    }
    if (always_singular) return WeylVerdict::kNonWeyl;
  }
  return WeylVerdict::kWeyl;
}

bool cross_check_weyl_standard(const MetricGraph& g) {
  for (const auto& v : g.vertices()) {
    if (is_general(v.coupling)) {
      throw Error(ErrorCode::kPreconditionViolated, "cross check needs standard or Dirichlet coupling");
    }
  }
  const bool non_weyl = classify_weyl(g).verdict == WeylVerdict::kNonWeyl;
  return non_weyl == !balanced_vertices(g).empty();
}

std::complex<double> ResonanceFamily::resonance(long n, double ell) const {
  return std::complex<double>(-argument + 2.0 * std::numbers::pi * static_cast<double>(n),
                              std::log(modulus)) / ell;
}

std::vector<ResonanceFamily> resonance_families(const SecularPolynomial& p, const RootOptions& options) {
  std::vector<ResonanceFamily> families;
  if (p.degree() == 0) return families;
  for (const Root& root : roots(p.poly, options)) {
    ResonanceFamily f;
    f.eigenvalue = 1.0 / root.value;
    f.modulus = std::abs(f.eigenvalue);
    f.argument = std::arg(f.eigenvalue);
    // arg returns [-pi, pi]; fold -pi onto pi.
    if (f.argument <= -std::numbers::pi + 1e-15) f.argument = std::numbers::pi;
    f.multiplicity = root.multiplicity;
    families.push_back(f);
  }
  std::sort(families.begin(), families.end(), [](const ResonanceFamily& a, const ResonanceFamily& b) {
    if (std::abs(a.modulus - b.modulus) > 1e-12) return a.modulus > b.modulus;
    return a.argument < b.argument;
  });
  for (const auto& f : families) {
    if (f.modulus > 1 + 1e-9) {
      throw Error(ErrorCode::kInternal, "eigenvalue modulus " + std::to_string(f.modulus) + " exceeds 1");
    }
  }
  return families;
}

std::vector<ResonanceFamily> resonance_families(const MetricGraph& g, const RootOptions& options) {
  auto families = resonance_families(secular_polynomial(g), options);
  if (!structural_flags(g).has_loops) {
    std::complex<double> trace = 0;
    for (const auto& f : families) trace += f.eigenvalue * static_cast<double>(f.multiplicity);
    if (std::abs(trace) > 1e-9) {
      throw Error(ErrorCode::kInternal, "eigenvalues of a loop-free graph do not sum to zero");
    }
  }
  return families;
}

DiscCount resonances_in_disc(std::span<const ResonanceFamily> families, double radius, double ell) {
  DiscCount out;
  if (!(radius > 0) || !(ell > 0)) return out;
  const double scaled = radius * ell;
  const double slack = 1e-12 * std::max(1.0, scaled);
  for (const auto& f : families) {
    const double im = std::log(f.modulus);
    if (std::abs(im) > scaled + slack) continue;
    const double half_width = std::sqrt(std::max(0.0, scaled * scaled - im * im));
    // -phi + 2 n pi in [-half_width, half_width]
    const long lo = static_cast<long>(std::floor((f.argument - half_width) / (2 * std::numbers::pi))) - 1;
    const long hi = static_cast<long>(std::ceil((f.argument + half_width) / (2 * std::numbers::pi))) + 1;
    for (long n = lo; n <= hi; ++n) {
      const std::complex<double> k = f.resonance(n, ell);
      if (std::abs(k) * ell <= scaled + slack) {
        out.points.push_back({k, f.multiplicity});
        out.count += f.multiplicity;
      }
    }
  }
  std::sort(out.points.begin(), out.points.end(), [](const ResonancePoint& a, const ResonancePoint& b) {
    if (a.k.real() != b.k.real()) return a.k.real() < b.k.real();
    return a.k.imag() < b.k.imag();
  });
  return out;
}

std::complex<double> secular_value(const MetricGraph& g, std::complex<double> k, bool use_coupling_formula) {
  const BondGraph bg = build_bond_graph(g);
  const auto n = static_cast<Eigen::Index>(bg.size());
  if (n == 0) return 1.0;

  Eigen::MatrixXcd sigma = Eigen::MatrixXcd::Zero(n, n);
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const Eigen::MatrixXcd local =
        use_coupling_formula ? formula_vertex_scattering(g, v, k) : vertex_scattering(g, v).at(k);
    const auto in = bg.incoming(v);
    for (auto a : in)
      for (auto b : in)
        sigma(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) =
            local(static_cast<Eigen::Index>(bg.arrival_port(a)), static_cast<Eigen::Index>(bg.arrival_port(b)));
  }
  const Eigen::MatrixXcd q = bg.q().to_complex();
  Eigen::MatrixXcd m = q * sigma;
  const std::complex<double> i(0, 1);
  for (Eigen::Index r = 0; r < n; ++r) {
    m.row(r) *= std::exp(i * k * to_double(bg.lengths()[static_cast<std::size_t>(r)]));
  }
  m -= Eigen::MatrixXcd::Identity(n, n);
  return m.partialPivLu().determinant();
}

}  // namespace qgraph
