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

#include "qgraph/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "qgraph/errors.hpp"

namespace qgraph {
namespace {

using cplx = std::complex<double>;

// Horner for sum |c_i| |z|^i, the scale of rounding error in p(z).
double magnitude_scale(std::span<const cplx> c, double r) {
  double s = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) s = s * r + std::abs(*it);
  return s;
}

// Horner for p and p' together.
void evaluate_with_derivative(std::span<const cplx> c, cplx z, cplx& p, cplx& dp) {
  p = 0;
  dp = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    dp = dp * z + p;
    p = p * z + *it;
  }
}

std::vector<cplx> aberth(std::span<const cplx> c, int max_iterations) {
  const int n = static_cast<int>(c.size()) - 1;
  std::vector<cplx> z(static_cast<std::size_t>(n));
  if (n == 0) return z;
  if (n == 1) {
    z[0] = -c[0] / c[1];
    return z;
  }

  // Initial guesses on a circle of the Fujiwara radius, rotated off the axes.
  double radius = 0;
  const double lead = std::abs(c[static_cast<std::size_t>(n)]);
  for (int k = 1; k <= n; ++k) {
    double term = std::pow(std::abs(c[static_cast<std::size_t>(n - k)]) / lead, 1.0 / k);
    if (k == n) term = std::pow(std::abs(c[0]) / (2 * lead), 1.0 / k);
    radius = std::max(radius, 2 * term);
  }
  if (radius == 0) radius = 1;
  for (int i = 0; i < n; ++i) {
    const double angle = 2 * std::numbers::pi * i / n + 0.4;
    z[static_cast<std::size_t>(i)] = std::polar(radius, angle);
  }

  std::vector<bool> done(static_cast<std::size_t>(n), false);
  for (int iter = 0; iter < max_iterations; ++iter) {
    bool all_done = true;
    for (int i = 0; i < n; ++i) {
      auto ui = static_cast<std::size_t>(i);
      if (done[ui]) continue;
      cplx p, dp;
      evaluate_with_derivative(c, z[ui], p, dp);
      // Stop once p(z) is indistinguishable from rounding noise.
      if (std::abs(p) <= 8 * n * std::numeric_limits<double>::epsilon() * magnitude_scale(c, std::abs(z[ui]))) {
        done[ui] = true;
        continue;
      }
      const cplx ratio = p / dp;
      cplx sum = 0;
      for (int j = 0; j < n; ++j)
        if (j != i) sum += 1.0 / (z[ui] - z[static_cast<std::size_t>(j)]);
      const cplx step = ratio / (1.0 - ratio * sum);
      z[ui] -= step;
      if (std::abs(step) <= 4 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(z[ui]))) {
        done[ui] = true;
      } else {
        all_done = false;
      }
    }
    if (all_done) return z;
  }
  throw Error(ErrorCode::kNoConvergence,
              "Aberth-Ehrlich did not converge in " + std::to_string(max_iterations) + " iterations");
}

// Newton polish against the original coefficients, stopping once the step
// stops shrinking.
cplx polish(std::span<const cplx> c, cplx z) {
  double last = std::numeric_limits<double>::infinity();
  for (int i = 0; i < 8; ++i) {
    cplx p, dp;
    evaluate_with_derivative(c, z, p, dp);
    if (dp == cplx(0) || p == cplx(0)) break;
    const cplx step = p / dp;
    if (!(std::abs(step) < last)) break;
    last = std::abs(step);
    z -= step;
  }
  return z;
}

RootSet cluster(std::vector<Root> raw, double tolerance) {
  RootSet out;
  std::vector<bool> used(raw.size(), false);
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (used[i]) continue;
    cplx weighted = raw[i].value * static_cast<double>(raw[i].multiplicity);
    int mult = raw[i].multiplicity;
    used[i] = true;
    for (std::size_t j = i + 1; j < raw.size(); ++j) {
      if (!used[j] && std::abs(raw[j].value - raw[i].value) < tolerance) {
        weighted += raw[j].value * static_cast<double>(raw[j].multiplicity);
        mult += raw[j].multiplicity;
        used[j] = true;
      }
    }
    out.push_back({weighted / static_cast<double>(mult), mult});
  }
  std::sort(out.begin(), out.end(), [](const Root& a, const Root& b) {
    if (a.value.real() != b.value.real()) return a.value.real() < b.value.real();
    return a.value.imag() < b.value.imag();
  });
  return out;
}

std::vector<cplx> to_complex(const RationalPolynomial& p) {
  std::vector<cplx> c;
  c.reserve(p.coefficients().size());
  for (const auto& q : p.coefficients()) c.emplace_back(q.get_d(), 0.0);
  return c;
}

}  // namespace

RootSet roots(std::span<const cplx> coefficients, const RootOptions& options) {
  std::vector<cplx> c(coefficients.begin(), coefficients.end());
  while (!c.empty() && c.back() == cplx(0)) c.pop_back();
  if (c.size() < 2) throw Error(ErrorCode::kInternal, "root finding needs degree >= 1");

  std::vector<Root> raw;
  std::size_t zeros = 0;
  while (c[zeros] == cplx(0)) ++zeros;
  if (zeros) raw.push_back({cplx(0), static_cast<int>(zeros)});
  std::vector<cplx> reduced(c.begin() + static_cast<std::ptrdiff_t>(zeros), c.end());
  for (cplx z : aberth(reduced, options.max_iterations)) raw.push_back({polish(reduced, z), 1});
  return cluster(std::move(raw), options.cluster_tolerance);
}

RootSet roots(const RationalPolynomial& p, const RootOptions& options) {
  if (p.degree() < 1) throw Error(ErrorCode::kInternal, "root finding needs degree >= 1");
  std::vector<Root> raw;
  for (const auto& [factor, mult] : squarefree_decomposition(p)) {
    // z = 0 is exact; strip it before the floating-point stage.
    std::vector<Rational> cs = factor.coefficients();
    std::size_t zeros = 0;
    while (zeros < cs.size() && sgn(cs[zeros]) == 0) ++zeros;
    if (zeros) raw.push_back({cplx(0), mult * static_cast<int>(zeros)});
    RationalPolynomial rest(std::vector<Rational>(cs.begin() + static_cast<std::ptrdiff_t>(zeros), cs.end()));
    if (rest.degree() < 1) continue;
    const std::vector<cplx> c = to_complex(rest.monic());
    for (cplx z : aberth(c, options.max_iterations)) raw.push_back({polish(c, z), mult});
  }
  RootSet out = cluster(std::move(raw), options.cluster_tolerance);

  // Residual guard, relative to the magnitude of the terms summed at z.
  for (const auto& r : out) {
    double scale = 0;
    double power = 1;
    for (const auto& q : p.coefficients()) {
      scale += std::abs(q.get_d()) * power;
      power *= std::abs(r.value);
    }
    if (std::abs(p.evaluate(r.value)) > 1e-9 * scale) {
      throw Error(ErrorCode::kNoConvergence, "root residual above tolerance");
    }
  }
  return out;
}

}  // namespace qgraph
