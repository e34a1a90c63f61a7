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

#include "qgraph/pseudo_orbits.hpp"

#include <algorithm>
#include <cstdint>

#include "qgraph/errors.hpp"

namespace qgraph {
namespace {

class BondSet {
 public:
  explicit BondSet(std::size_t n) : words_((n + 63) / 64, 0) {}
  BondSet(std::size_t n, const std::vector<std::size_t>& bonds) : BondSet(n) {
    for (auto b : bonds) words_[b / 64] |= std::uint64_t{1} << (b % 64);
  }

  bool contains(std::size_t b) const { return (words_[b / 64] >> (b % 64)) & 1; }
  bool disjoint(const BondSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return false;
    return true;
  }
  void flip(const BondSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
  }

 private:
  std::vector<std::uint64_t> words_;
};

}  // namespace

Digraph bond_digraph(const RationalMatrix& m) {
  Digraph g(m.cols());
  for (std::size_t from = 0; from < m.cols(); ++from)
    for (std::size_t to = 0; to < m.rows(); ++to)
      if (sgn(m(to, from)) != 0) g[from].push_back(to);
  return g;
}

std::vector<PeriodicOrbit> enumerate_cycles(const RationalMatrix& m, std::size_t cap) {
  std::vector<PeriodicOrbit> orbits;
  for (auto& cycle : simple_cycles(bond_digraph(m), cap)) {
    PeriodicOrbit orbit;
    orbit.amplitude = 1;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      orbit.amplitude *= m(cycle[(i + 1) % cycle.size()], cycle[i]);
    }
    orbit.bonds = std::move(cycle);
    orbits.push_back(std::move(orbit));
  }
  std::sort(orbits.begin(), orbits.end(), [](const PeriodicOrbit& a, const PeriodicOrbit& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.bonds < b.bonds;
  });
  return orbits;
}

void for_each_pseudo_orbit(const std::vector<PeriodicOrbit>& orbits, std::size_t bond_count,
                           const OrbitOptions& options,
                           const std::function<void(const PseudoOrbit&)>& visit) {
  std::vector<std::vector<std::size_t>> by_first(bond_count);
  std::vector<BondSet> masks;
  masks.reserve(orbits.size());
  for (std::size_t i = 0; i < orbits.size(); ++i) {
    if (orbits[i].size() > options.max_bonds) {
      masks.emplace_back(bond_count);
      continue;
    }
    by_first[orbits[i].bonds.front()].push_back(i);
    masks.emplace_back(bond_count, orbits[i].bonds);
  }

  BondSet used(bond_count);
  PseudoOrbit current;
  std::size_t emitted = 0;

  std::function<void(std::size_t)> extend = [&](std::size_t next_first) {
    if (++emitted > options.cap) {
      throw Error(ErrorCode::kCapExceeded, "more than " + std::to_string(options.cap) + " pseudo orbits");
    }
    visit(current);
    for (std::size_t first = next_first; first < bond_count; ++first) {
      if (used.contains(first)) continue;
      for (auto idx : by_first[first]) {
        const auto& orbit = orbits[idx];
        if (current.total_bonds + orbit.size() > options.max_bonds) continue;
        if (!used.disjoint(masks[idx])) continue;
        used.flip(masks[idx]);
        current.orbits.push_back(idx);
        current.total_bonds += orbit.size();
        const Rational saved = current.amplitude;
        current.amplitude *= orbit.amplitude;
        extend(first + 1);
        current.amplitude = saved;
        current.total_bonds -= orbit.size();
        current.orbits.pop_back();
        used.flip(masks[idx]);
      }
    }
  };
  extend(0);
}

RationalPolynomial expansion_polynomial(const RationalMatrix& m, const OrbitOptions& options) {
  if (!m.is_square()) throw Error(ErrorCode::kInternal, "expansion needs a square matrix");
  const auto orbits = enumerate_cycles(m, options.cap);
  std::vector<Rational> coeffs(m.rows() + 1);
  for_each_pseudo_orbit(orbits, m.rows(), options, [&](const PseudoOrbit& p) {
    if (sgn(p.amplitude) != 0) coeffs[p.total_bonds] += p.contribution();
  });
  return RationalPolynomial(std::move(coeffs));
}

SecularPolynomial expansion_polynomial(const MetricGraph& g, const OrbitOptions& options) {
  require_valid(g);
  const StructuralFlags flags = structural_flags(g);
  if (!flags.equilateral) throw Error(ErrorCode::kNotEquilateral, "edge lengths differ");
  const RationalMatrix s = exact_bond_scattering(g);
  SecularPolynomial out;
  out.poly = expansion_polynomial(s, options);
  out.ell = flags.common_length.value_or(Rational(0));
  out.bond_count = s.rows();
  return out;
}

std::map<std::size_t, std::vector<const PseudoOrbit*>> OrbitReport::by_bond_count() const {
  std::map<std::size_t, std::vector<const PseudoOrbit*>> groups;
  for (const auto& p : pseudo_orbits) groups[p.total_bonds].push_back(&p);
  return groups;
}

OrbitReport orbit_report(const RationalMatrix& m, const OrbitOptions& options) {
  OrbitReport report;
  report.orbits = enumerate_cycles(m, options.cap);
  std::erase_if(report.orbits, [&](const PeriodicOrbit& o) { return o.size() > options.max_bonds; });
  for_each_pseudo_orbit(report.orbits, m.rows(), options,
                        [&](const PseudoOrbit& p) { report.pseudo_orbits.push_back(p); });
  std::stable_sort(report.pseudo_orbits.begin(), report.pseudo_orbits.end(),
                   [](const PseudoOrbit& a, const PseudoOrbit& b) {
                     if (a.total_bonds != b.total_bonds) return a.total_bonds < b.total_bonds;
                     return a.orbits < b.orbits;
                   });
  return report;
}

OrbitReport orbit_report(const MetricGraph& g, std::size_t max_bonds, std::size_t cap) {
  if (!structural_flags(g).equilateral) throw Error(ErrorCode::kNotEquilateral, "edge lengths differ");
  OrbitOptions options;
  options.cap = cap;
  options.max_bonds = max_bonds;
  return orbit_report(exact_bond_scattering(g), options);
}

std::string describe(const OrbitReport& report, const PseudoOrbit& p, const BondGraph& bg) {
  if (p.orbits.empty()) return "()";
  std::string out;
  for (auto idx : p.orbits) {
    out += "(";
    const auto& bonds = report.orbits[idx].bonds;
    for (std::size_t i = 0; i < bonds.size(); ++i) {
      if (i) out += " ";
      out += bg.label(bonds[i]);
    }
    out += ")";
  }
  return out;
}

}  // namespace qgraph
