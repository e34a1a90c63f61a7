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

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "qgraph/metric_graph.hpp"
#include "qgraph/polynomial.hpp"
#include "qgraph/roots.hpp"

namespace qgraph {

/// P(z) = det(z S - I) for an equilateral graph, z = exp(i k ell).
struct SecularPolynomial {
  RationalPolynomial poly;
  Rational ell;             // common edge length; 0 when the graph has no edges
  std::size_t bond_count = 0;  // 2N

  std::size_t degree() const { return poly.degree() < 0 ? 0 : static_cast<std::size_t>(poly.degree()); }
  /// Zero eigenvalues of S, read off as 2N - deg P.
  std::size_t zero_eigenvalues() const { return bond_count - degree(); }
};

/// Requires an equilateral graph whose couplings are all k-independent.
/// Throws Error(kNotEquilateral), Error(kKDependentCoupling) or Error(kNotExact).
SecularPolynomial secular_polynomial(const MetricGraph& g);

enum class WeylVerdict { kWeyl, kNonWeyl };

struct WeylClass {
  WeylVerdict verdict = WeylVerdict::kWeyl;
  Rational effective_size;  // W = (ell / 2) deg P
  Rational volume;
};

WeylClass classify_weyl(const MetricGraph& g);
WeylClass classify_weyl(const SecularPolynomial& p);

/// Vertex-wise verdict that needs neither equal lengths nor exact scattering:
/// non-Weyl iff some vertex has det sigma_v(k) = 0 at every probe wavenumber.
WeylVerdict classify_weyl_by_vertices(const MetricGraph& g);

/// Standard/Dirichlet only: the polynomial verdict agrees with the
/// existence of a balanced vertex.
bool cross_check_weyl_standard(const MetricGraph& g);

/// Lattice of resonances k_n = (-phi + 2 n pi + i ln r) / ell generated by
/// one nonzero eigenvalue c = r exp(i phi) of S.
struct ResonanceFamily {
  std::complex<double> eigenvalue;
  double modulus = 0;
  double argument = 0;  // in (-pi, pi]
  int multiplicity = 1;

  std::complex<double> resonance(long n, double ell) const;
};

/// Nonzero eigenvalues c_j = 1 / z_j from the roots of P. Checks |c_j| <= 1
/// and, for loop-free graphs, sum mult_j c_j = 0 (both to 1e-9) and throws
/// Error(kInternal) if either fails.
std::vector<ResonanceFamily> resonance_families(const MetricGraph& g, const RootOptions& options = {});
std::vector<ResonanceFamily> resonance_families(const SecularPolynomial& p, const RootOptions& options = {});

struct ResonancePoint {
  std::complex<double> k;
  int multiplicity = 1;
};

struct DiscCount {
  long count = 0;
  std::vector<ResonancePoint> points;
};

/// All lattice points with |k| <= radius, counted with multiplicity
/// (k-plane convention: k and -k both count). Sorted by (Re k, Im k).
DiscCount resonances_in_disc(std::span<const ResonanceFamily> families, double radius, double ell);

/// det(exp(i k L) S(k) - I) evaluated numerically for any valid graph.
/// With use_coupling_formula the standard and Dirichlet vertices also go
/// through the general effective-scattering formula.
/// Throws Error(kSingularPivot) at forbidden k.
std::complex<double> secular_value(const MetricGraph& g, std::complex<double> k,
                                   bool use_coupling_formula = false);

}  // namespace qgraph
