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

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "qgraph/bond_graph.hpp"
#include "qgraph/cycles.hpp"
#include "qgraph/metric_graph.hpp"
#include "qgraph/polynomial.hpp"
#include "qgraph/rational_matrix.hpp"
#include "qgraph/secular.hpp"

namespace qgraph {

inline constexpr std::size_t kDefaultOrbitCap = 1'000'000;

/// Closed walk in bond space visiting each bond at most once, rotated so the
/// smallest bond index comes first. amplitude = S[b2,b1] S[b3,b2] ... S[b1,bn].
struct PeriodicOrbit {
  std::vector<std::size_t> bonds;
  Rational amplitude;

  std::size_t size() const noexcept { return bonds.size(); }
};

/// Bond-disjoint collection of periodic orbits (indices into the orbit list).
/// The empty collection is the pseudo orbit on zero bonds with amplitude 1.
struct PseudoOrbit {
  std::vector<std::size_t> orbits;
  std::size_t total_bonds = 0;
  Rational amplitude = 1;

  std::size_t orbit_count() const noexcept { return orbits.size(); }
  /// (-1)^m A, the term this pseudo orbit adds to the z^total_bonds coefficient.
  Rational contribution() const { return orbits.size() % 2 ? Rational(-amplitude) : amplitude; }
};

struct OrbitOptions {
  /// Upper bound on both periodic orbits and irreducible pseudo orbits.
  std::size_t cap = kDefaultOrbitCap;
  /// Only orbits and pseudo orbits on at most this many bonds.
  std::size_t max_bonds = static_cast<std::size_t>(-1);
};

/// Bond digraph of a matrix: b -> b' whenever m[b', b] != 0.
Digraph bond_digraph(const RationalMatrix& m);

/// All periodic orbits of the support of m with exact amplitudes, sorted by
/// (size, bond sequence). Throws Error(kCapExceeded).
std::vector<PeriodicOrbit> enumerate_cycles(const RationalMatrix& m, std::size_t cap = kDefaultOrbitCap);

/// Calls visit for every irreducible pseudo orbit built from `orbits`,
/// starting with the empty one. Orbits are combined in increasing order of
/// their first bond, so each collection is produced once.
void for_each_pseudo_orbit(const std::vector<PeriodicOrbit>& orbits, std::size_t bond_count,
                           const OrbitOptions& options,
                           const std::function<void(const PseudoOrbit&)>& visit);

/// Coefficient of z^t = sum over irreducible pseudo orbits on t bonds of (-1)^m A.
RationalPolynomial expansion_polynomial(const RationalMatrix& m, const OrbitOptions& options = {});
SecularPolynomial expansion_polynomial(const MetricGraph& g, const OrbitOptions& options = {});

struct OrbitReport {
  std::vector<PeriodicOrbit> orbits;
  std::vector<PseudoOrbit> pseudo_orbits;  // sorted by total_bonds, then orbit indices

  /// Pseudo orbits grouped by their bond count.
  std::map<std::size_t, std::vector<const PseudoOrbit*>> by_bond_count() const;
};

OrbitReport orbit_report(const RationalMatrix& m, const OrbitOptions& options);
OrbitReport orbit_report(const MetricGraph& g, std::size_t max_bonds, std::size_t cap = kDefaultOrbitCap);

/// "(e1 ^e1)(e2 ^e2)"; "()" for the empty pseudo orbit.
std::string describe(const OrbitReport& report, const PseudoOrbit& p, const BondGraph& bg);

}  // namespace qgraph
