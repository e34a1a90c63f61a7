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

#include <random>

#include "golden.hpp"
#include "oracles.hpp"
#include "qgraph/bond_graph.hpp"
#include "qgraph/errors.hpp"
#include "qgraph/polynomial.hpp"
#include "qgraph/rational.hpp"
#include "qgraph/rational_matrix.hpp"
#include "qgraph/roots.hpp"

namespace qgraph {
namespace {

RationalPolynomial poly(std::initializer_list<const char*> coeffs) {
  std::vector<Rational> c;
  for (const char* s : coeffs) c.push_back(parse_rational(s));
  return RationalPolynomial(std::move(c));
}

RationalMatrix random_sparse(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<int> num(-4, 4), den(1, 5);
  std::bernoulli_distribution keep(0.45);
  RationalMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (keep(rng)) m(r, c) = ratio(num(rng), den(rng));
  return m;
}

TEST(Rational, ParsesDecimalsAndFractions) {
  EXPECT_EQ(parse_rational("2"), Rational(2));
  EXPECT_EQ(parse_rational("-0.125"), ratio(-1, 8));
  EXPECT_EQ(parse_rational("1.5e-3"), ratio(3, 2000));
  EXPECT_EQ(parse_rational("6/8"), ratio(3, 4));
  EXPECT_EQ(to_fraction_string(parse_rational("3")), "3/1");
  EXPECT_EQ(to_string(ratio(-2, 4)), "-1/2");
}

TEST(Rational, RejectsMalformedText) {
  for (const char* bad : {"", "abc", "1/0", "1.2.3", "--1", "1e"}) {
    try {
      parse_rational(bad);
      ADD_FAILURE() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kParse) << bad;
    }
  }
}

TEST(DetRank, IdentityHasFullRank) {
  const DetRank dr = det_rank(RationalMatrix::identity(4));
  EXPECT_EQ(dr.det, Rational(1));
  EXPECT_EQ(dr.rank, 4u);
}

TEST(DetRank, SquareDiagonalScatteringRanks) {
  const RationalMatrix s = exact_bond_scattering(testing::square_diagonal());
  EXPECT_EQ(det_rank(s).rank, testing::gauss_rank(s));
  EXPECT_EQ(det_rank(s).rank, 6u);
  EXPECT_EQ(det_rank(s * s).rank, testing::gauss_rank(s * s));
  EXPECT_EQ(det_rank(s * s).rank, 5u);
}

TEST(DetRank, AgreesWithPermutationSumAndGaussRank) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 6;
    const RationalMatrix m = random_sparse(rng, n);
    const DetRank dr = det_rank(m);
    EXPECT_EQ(dr.det, testing::leibniz_det(m));
    EXPECT_EQ(dr.rank, testing::gauss_rank(m));
  }
}

TEST(DetRank, EmptyMatrix) {
  const DetRank dr = det_rank(RationalMatrix(0, 0));
  EXPECT_EQ(dr.det, Rational(1));
  EXPECT_EQ(dr.rank, 0u);
}

TEST(Charpoly, GoldenGraphs) {
  EXPECT_EQ(charpoly_zS_minus_I(exact_bond_scattering(testing::star3())), poly({"1", "0", "-2", "0", "1"}));
  EXPECT_EQ(charpoly_zS_minus_I(exact_bond_scattering(testing::square_diagonal())),
            poly({"1", "0", "-16/9", "-2/9", "7/9", "2/9"}));
  EXPECT_EQ(charpoly_zS_minus_I(exact_bond_scattering(testing::k4())),
            poly({"1", "0", "-8/3", "-8/27", "62/27", "16/27", "-16/27", "-8/27", "-1/27"}));
}

TEST(Charpoly, AgreesWithPermutationSum) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const RationalMatrix m = random_sparse(rng, 1 + trial % 6);
    EXPECT_EQ(charpoly_zS_minus_I(m), testing::leibniz_secular(m));
  }
}

TEST(Polynomial, ArithmeticAndGcd) {
  const auto a = poly({"-1", "0", "1"});  // z^2 - 1
  const auto b = poly({"1", "1"});        // z + 1
  const auto [q, r] = divmod(a, b);
  EXPECT_EQ(q, poly({"-1", "1"}));
  EXPECT_TRUE(r.is_zero());
  EXPECT_EQ(gcd(a * a, a * b), gcd(a, b) * a.monic());
  EXPECT_EQ(to_string(poly({"1", "0", "-2", "0", "1"})), "1 - 2*z^2 + z^4");
}

TEST(Polynomial, SquarefreeDecomposition) {
  const auto lin = poly({"-1", "1"});
  const auto quad = poly({"1", "0", "1"});
  const auto p = RationalPolynomial::constant(ratio(3, 2)) * lin * lin * lin * quad;
  const auto parts = squarefree_decomposition(p);
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_EQ(parts[0].first, quad);
  EXPECT_EQ(parts[0].second, 1);
  EXPECT_EQ(parts[1].first, lin);
  EXPECT_EQ(parts[1].second, 3);
}

TEST(Roots, DoubleRootsOfStarPolynomial) {
  const RootSet r = roots(poly({"1", "0", "-2", "0", "1"}));
  ASSERT_EQ(r.size(), 2u);
  EXPECT_NEAR(std::abs(r[0].value - std::complex<double>(-1)), 0, 1e-12);
  EXPECT_EQ(r[0].multiplicity, 2);
  EXPECT_NEAR(std::abs(r[1].value - std::complex<double>(1)), 0, 1e-12);
  EXPECT_EQ(r[1].multiplicity, 2);
}

TEST(Roots, PlusMinusOne) {
  const RootSet r = roots(poly({"-1", "0", "1"}));
  ASSERT_EQ(r.size(), 2u);
  EXPECT_NEAR(r[0].value.real(), -1, 1e-12);
  EXPECT_NEAR(r[1].value.real(), 1, 1e-12);
}

TEST(Roots, SquareDiagonalReciprocals) {
  const RootSet r = roots(poly({"1", "0", "-16/9", "-2/9", "7/9", "2/9"}));
  // z-roots are 1/c for c in {-2/3, -1/3, -1, 1, 1}.
  const std::vector<std::pair<double, int>> expected = {{-3.0, 1}, {-1.5, 1}, {-1.0, 1}, {1.0, 2}};
  ASSERT_EQ(r.size(), expected.size());
  for (std::size_t i = 0; i < r.size(); ++i) {
    EXPECT_NEAR(std::abs(r[i].value - expected[i].first), 0, 1e-9);
    EXPECT_EQ(r[i].multiplicity, expected[i].second);
  }
}

TEST(Roots, ComplexRoots) {
  const RootSet r = roots(poly({"1", "0", "1"}));
  ASSERT_EQ(r.size(), 2u);
  EXPECT_NEAR(std::abs(r[0].value - std::complex<double>(0, -1)), 0, 1e-12);
  EXPECT_NEAR(std::abs(r[1].value - std::complex<double>(0, 1)), 0, 1e-12);
}

TEST(Roots, ZeroRootsAreKept) {
  const RootSet r = roots(poly({"0", "0", "-1", "1"}));
  ASSERT_EQ(r.size(), 2u);
  EXPECT_NEAR(std::abs(r[0].value), 0, 1e-15);
  EXPECT_EQ(r[0].multiplicity, 2);
}

TEST(Roots, ConstantPolynomialIsRejected) {
  EXPECT_THROW(roots(poly({"3"})), Error);
}

}  // namespace
}  // namespace qgraph
