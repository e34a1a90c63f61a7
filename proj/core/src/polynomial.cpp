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

#include "qgraph/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "qgraph/errors.hpp"

namespace qgraph {

RationalPolynomial::RationalPolynomial(std::vector<Rational> coefficients)
    : coeffs_(std::move(coefficients)) {
  trim();
}

RationalPolynomial RationalPolynomial::constant(const Rational& c) {
  return RationalPolynomial(std::vector<Rational>{c});
}

RationalPolynomial RationalPolynomial::monomial(const Rational& c, std::size_t power) {
  std::vector<Rational> v(power + 1);
  v[power] = c;
  return RationalPolynomial(std::move(v));
}

void RationalPolynomial::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Rational RationalPolynomial::coefficient(std::size_t power) const {
  return power < coeffs_.size() ? coeffs_[power] : Rational(0);
}

Rational RationalPolynomial::evaluate(const Rational& z) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

std::complex<double> RationalPolynomial::evaluate(std::complex<double> z) const {
  std::complex<double> acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + it->get_d();
  return acc;
}

RationalPolynomial RationalPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
  return RationalPolynomial(std::move(d));
}

RationalPolynomial RationalPolynomial::monic() const {
  if (is_zero()) return {};
  std::vector<Rational> v = coeffs_;
  const Rational lead = v.back();
  for (auto& c : v) c /= lead;
  return RationalPolynomial(std::move(v));
}

RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b) {
  std::vector<Rational> v(std::max(a.coefficients().size(), b.coefficients().size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coefficient(i) + b.coefficient(i);
  return RationalPolynomial(std::move(v));
}

RationalPolynomial operator-(const RationalPolynomial& a, const RationalPolynomial& b) {
  std::vector<Rational> v(std::max(a.coefficients().size(), b.coefficients().size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coefficient(i) - b.coefficient(i);
  return RationalPolynomial(std::move(v));
}

RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const auto& x = a.coefficients();
  const auto& y = b.coefficients();
  std::vector<Rational> v(x.size() + y.size() - 1);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) v[i + j] += x[i] * y[j];
  return RationalPolynomial(std::move(v));
}

std::pair<RationalPolynomial, RationalPolynomial> divmod(const RationalPolynomial& a,
                                                         const RationalPolynomial& b) {
  if (b.is_zero()) throw Error(ErrorCode::kInternal, "polynomial division by zero");
  std::vector<Rational> rem = a.coefficients();
  const int db = b.degree();
  if (a.degree() < db) return {RationalPolynomial{}, a};
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db + 1));
  const Rational& lead = b.leading();
  for (int k = a.degree() - db; k >= 0; --k) {
    const Rational q = rem[static_cast<std::size_t>(k + db)] / lead;
    quot[static_cast<std::size_t>(k)] = q;
    if (sgn(q) == 0) continue;
    for (int j = 0; j <= db; ++j)
      rem[static_cast<std::size_t>(k + j)] -= q * b.coefficients()[static_cast<std::size_t>(j)];
  }
  return {RationalPolynomial(std::move(quot)), RationalPolynomial(std::move(rem))};
}

RationalPolynomial gcd(const RationalPolynomial& a, const RationalPolynomial& b) {
  RationalPolynomial x = a;
  RationalPolynomial y = b;
  while (!y.is_zero()) {
    RationalPolynomial r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

std::vector<std::pair<RationalPolynomial, int>> squarefree_decomposition(
    const RationalPolynomial& p) {
  std::vector<std::pair<RationalPolynomial, int>> out;
  if (p.degree() < 1) return out;
  const RationalPolynomial dp = p.derivative();
  RationalPolynomial a = gcd(p, dp);
  RationalPolynomial b = divmod(p, a).first;
  RationalPolynomial c = divmod(dp, a).first;
  RationalPolynomial d = c - b.derivative();
  int i = 1;
  while (b.degree() >= 1) {
    RationalPolynomial f = gcd(b, d);
    if (f.degree() >= 1) out.emplace_back(f, i);
    b = divmod(b, f).first;
    c = divmod(d, f).first;
    d = c - b.derivative();
    ++i;
  }
  return out;
}

RationalPolynomial charpoly_zS_minus_I(const RationalMatrix& s) {
  if (!s.is_square()) throw Error(ErrorCode::kInternal, "charpoly needs a square matrix");
  const std::size_t n = s.rows();
  // det(xI - S) = sum_k c[k] x^k with c[n] = 1, via M_k = S M_{k-1} + c[n-k+1] I
  // and c[n-k] = -tr(S M_k) / k.
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  RationalMatrix m(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    RationalMatrix next = s * m;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    m = std::move(next);
    c[n - k] = -(s * m).trace() / static_cast<long>(k);
  }
  // det(zS - I) = (-1)^n det(I - zS) = (-1)^n sum_k c[k] z^(n-k).
  std::vector<Rational> p(n + 1);
  for (std::size_t j = 0; j <= n; ++j) p[j] = (n % 2 == 0) ? c[n - j] : Rational(-c[n - j]);
  return RationalPolynomial(std::move(p));
}

std::string to_string(const RationalPolynomial& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  const auto& cs = p.coefficients();
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (sgn(cs[i]) == 0) continue;
    Rational mag = abs(cs[i]);
    if (first) {
      if (sgn(cs[i]) < 0) os << "-";
    } else {
      os << (sgn(cs[i]) < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) {
      os << to_string(mag);
      if (i > 0) os << "*";
    }
    if (i >= 1) os << var;
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

}  // namespace qgraph
