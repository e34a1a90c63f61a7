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

#include <gtest/gtest.h>

#include <numbers>
#include <random>

#include "golden.hpp"
#include "oracles.hpp"
#include "random_graphs.hpp"
#include "qgraph/bond_graph.hpp"
#include "qgraph/errors.hpp"
#include "qgraph/secular.hpp"

namespace qgraph {
namespace {

using std::numbers::pi;
using C = std::complex<double>;

struct Family {
  C c;
  int mult;
};

void expect_families(const std::vector<ResonanceFamily>& got, std::vector<Family> want) {
  ASSERT_EQ(got.size(), want.size());
  for (const auto& w : want) {
    bool found = false;
    for (const auto& f : got)
      if (std::abs(f.eigenvalue - w.c) < 1e-9 && f.multiplicity == w.mult) found = true;
    EXPECT_TRUE(found) << w.c << " x" << w.mult;
  }
}

TEST(SecularPolynomial, DirichletInterval) {
  const SecularPolynomial p = secular_polynomial(testing::dirichlet_interval());
  EXPECT_EQ(p.poly, RationalPolynomial({Rational(1), Rational(0), Rational(-1)}));
  EXPECT_EQ(p.zero_eigenvalues(), 0u);
}

TEST(SecularPolynomial, NotEquilateral) {
  const MetricGraph g({{"a", 0}, {"b", 1}}, {{"1", "a", "b", Rational(1)}, {"2", "a", "b", Rational(2)}});
  try {
    secular_polynomial(g);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotEquilateral);
  }
}

TEST(SecularPolynomial, ConstantTermIsOne) {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const SecularPolynomial p = secular_polynomial(testing::random_equilateral_graph(rng));
    EXPECT_EQ(p.poly.coefficient(0), Rational(1));
    EXPECT_LE(p.degree(), p.bond_count);
  }
}

TEST(Classify, GoldenGraphs) {
  const WeylClass star = classify_weyl(testing::star3());
  EXPECT_EQ(star.verdict, WeylVerdict::kNonWeyl);
  EXPECT_EQ(star.effective_size, Rational(2));
  EXPECT_EQ(star.volume, Rational(3));
  EXPECT_EQ(classify_weyl(testing::square_diagonal()).effective_size, ratio(5, 2));
  EXPECT_EQ(classify_weyl(testing::k4(ratio(1, 2))).effective_size, Rational(2));
  EXPECT_EQ(classify_weyl(testing::dirichlet_interval()).verdict, WeylVerdict::kWeyl);
}

TEST(Classify, CrossCheckOnGoldenAndRandomGraphs) {
  for (const auto& g : {testing::star3(), testing::square_diagonal(), testing::k4(), testing::dirichlet_interval()})
    EXPECT_TRUE(cross_check_weyl_standard(g));
  std::mt19937 rng(37);
  testing::RandomGraphOptions options;
  options.max_edges = 5;
  for (int trial = 0; trial < 100; ++trial) EXPECT_TRUE(cross_check_weyl_standard(testing::random_equilateral_graph(rng, options)));
}

TEST(Classify, VertexVerdictWithoutEqualLengths) {
  const MetricGraph g({{"a", 0, DirichletCoupling{}}, {"b", 2}, {"c", 0, DirichletCoupling{}}},
                      {{"1", "a", "b", Rational(1)}, {"2", "b", "c", Rational(3)}});
  EXPECT_EQ(classify_weyl_by_vertices(g), WeylVerdict::kNonWeyl);
  const MetricGraph h({{"a", 0, DirichletCoupling{}}, {"b", 1}, {"c", 0, DirichletCoupling{}}},
                      {{"1", "a", "b", Rational(1)}, {"2", "b", "c", Rational(3)}});
  EXPECT_EQ(classify_weyl_by_vertices(h), WeylVerdict::kWeyl);
}

TEST(Families, GoldenGraphs) {
  expect_families(resonance_families(testing::star3()), {{C(1), 2}, {C(-1), 2}});
  expect_families(resonance_families(testing::square_diagonal()),
                  {{C(-2.0 / 3), 1}, {C(-1.0 / 3), 1}, {C(-1), 1}, {C(1), 2}});
  expect_families(resonance_families(testing::k4()), {{C(-1), 2}, {C(1), 3}, {C(-1.0 / 3), 3}});
}

TEST(Families, LatticePositions) {
  const double ell = 2;
  for (const auto& f : resonance_families(testing::k4(Rational(2)))) {
    if (std::abs(f.eigenvalue + 1.0 / 3) > 1e-9) continue;
    for (long n = -3; n <= 3; ++n) {
      // (1/ell)[(2m+1) pi - i ln 3] for some integer m.
      const C k = f.resonance(n, ell);
      EXPECT_NEAR(k.imag(), -std::log(3.0) / ell, 1e-9);
      const double m = (k.real() * ell / pi - 1) / 2;
      EXPECT_NEAR(m, std::round(m), 1e-9);
    }
  }
}

TEST(Families, ModulusAndTraceOnRandomGraphs) {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    const MetricGraph g = testing::random_equilateral_graph(rng);
    const auto families = resonance_families(g);
    C sum = 0;
    for (const auto& f : families) {
      EXPECT_LE(f.modulus, 1 + 1e-9);
      sum += static_cast<double>(f.multiplicity) * f.eigenvalue;
    }
    if (!structural_flags(g).has_loops) EXPECT_LT(std::abs(sum), 1e-9);
  }
}

TEST(Disc, SmallRadius) {
  const auto families = resonance_families(testing::star3());
  const DiscCount d = resonances_in_disc(families, 0.1, 1.0);
  EXPECT_EQ(d.count, 2);
  EXPECT_EQ(resonances_in_disc({}, 10, 1.0).count, 0);
}

TEST(Disc, MatchesLatticeScan) {
  for (const auto& g : {testing::star3(), testing::square_diagonal(), testing::k4(ratio(3, 2))}) {
    const auto families = resonance_families(g);
    const double ell = to_double(*structural_flags(g).common_length);
    for (double r : {0.5, 3.0, 17.0, 50.0}) {
      const DiscCount d = resonances_in_disc(families, r, ell);
      EXPECT_EQ(d.count, testing::lattice_count(families, r, ell)) << r;
      long total = 0;
      for (const auto& p : d.points) {
        EXPECT_LE(std::abs(p.k), r);
        total += p.multiplicity;
      }
      EXPECT_EQ(total, d.count);
    }
  }
}

TEST(SecularValue, StarResonance) {
  const MetricGraph g = testing::star3();
  EXPECT_LT(std::abs(secular_value(g, pi)), 1e-9);
  EXPECT_LT(std::abs(secular_value(g, 2 * pi)), 1e-9);
  EXPECT_GT(std::abs(secular_value(g, pi / 2)), 1);
}

TEST(SecularValue, AgreesWithPolynomial) {
  std::mt19937 rng(43);
  std::uniform_real_distribution<double> re(-6, 6), im(-1, 1);
  for (const auto& g : {testing::star3(), testing::square_diagonal(), testing::k4(ratio(1, 2))}) {
    const SecularPolynomial p = secular_polynomial(g);
    const double ell = to_double(p.ell);
    for (int i = 0; i < 20; ++i) {
      const C k(re(rng), im(rng));
      const C z = std::exp(C(0, 1) * k * ell);
      EXPECT_LT(std::abs(secular_value(g, k) - p.poly.evaluate(z)), 1e-9);
      EXPECT_LT(std::abs(secular_value(g, k, true) - p.poly.evaluate(z)), 1e-9);
    }
  }
}

TEST(SecularValue, ZeroWavenumber) {
  const MetricGraph g = testing::square_diagonal();
  const Eigen::MatrixXcd s = exact_bond_scattering(g).to_complex();
  const C expected = (s - Eigen::MatrixXcd::Identity(s.rows(), s.cols())).determinant();
  EXPECT_LT(std::abs(secular_value(g, 0) - expected), 1e-12);
}

TEST(SecularValue, NonEquilateral) {
  // Dirichlet interval of length a + b split by a degree-2 standard vertex:
  // resonances sit at k = n pi / (a + b).
  const MetricGraph g({{"a", 0, DirichletCoupling{}}, {"m", 0}, {"b", 0, DirichletCoupling{}}},
                      {{"1", "a", "m", Rational(1)}, {"2", "m", "b", ratio(3, 2)}});
  EXPECT_LT(std::abs(secular_value(g, pi / 2.5)), 1e-9);
  EXPECT_GT(std::abs(secular_value(g, pi / 3.1)), 1e-3);
}

}  // namespace
}  // namespace qgraph
