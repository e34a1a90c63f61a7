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
#include <string>
#include <utility>
#include <vector>

#include "qgraph/rational.hpp"
#include "qgraph/rational_matrix.hpp"

namespace qgraph {

/// Polynomial with exact rational coefficients; index i holds the z^i
/// coefficient. Trailing zeros are trimmed on every mutation, so degree()
/// always reflects the true degree (the zero polynomial has degree -1).
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<Rational> coefficients);

  static RationalPolynomial constant(const Rational& c);
  static RationalPolynomial monomial(const Rational& c, std::size_t power);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }

  /// Coefficient of z^power; zero beyond the degree.
  Rational coefficient(std::size_t power) const;
  const Rational& leading() const { return coeffs_.back(); }

  Rational evaluate(const Rational& z) const;
  std::complex<double> evaluate(std::complex<double> z) const;

  RationalPolynomial derivative() const;
  RationalPolynomial monic() const;

  friend bool operator==(const RationalPolynomial&, const RationalPolynomial&) = default;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b);
RationalPolynomial operator-(const RationalPolynomial& a, const RationalPolynomial& b);
RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b);

/// Euclidean division; throws on a zero divisor.
std::pair<RationalPolynomial, RationalPolynomial> divmod(const RationalPolynomial& a,
                                                         const RationalPolynomial& b);

/// Monic gcd (zero if both are zero).
RationalPolynomial gcd(const RationalPolynomial& a, const RationalPolynomial& b);

/// Yun's square-free decomposition: p = c * prod_i f_i^i with each f_i
/// square-free and pairwise coprime. Returns (f_i, i) for non-constant f_i.
std::vector<std::pair<RationalPolynomial, int>> squarefree_decomposition(
    const RationalPolynomial& p);

/// Exact coefficients of det(z S - I) via Faddeev-LeVerrier on S.
RationalPolynomial charpoly_zS_minus_I(const RationalMatrix& s);

/// Human form in the variable name given, e.g. "1 - 2*z^2 + z^4".
std::string to_string(const RationalPolynomial& p, const std::string& var = "z");

}  // namespace qgraph
