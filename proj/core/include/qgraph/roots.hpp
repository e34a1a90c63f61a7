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
#include <span>
#include <vector>

#include "qgraph/polynomial.hpp"

namespace qgraph {

struct Root {
  std::complex<double> value;
  int multiplicity = 1;
};

using RootSet = std::vector<Root>;

struct RootOptions {
  /// Roots closer than this are merged into one root of summed multiplicity.
  double cluster_tolerance = 1e-7;
  int max_iterations = 500;
};

/// Roots of an exact polynomial. The polynomial is split into square-free
/// factors first, so each Aberth-Ehrlich run only sees simple roots and the
/// multiplicities are exact. Results are sorted by (real, imag).
/// Throws Error(kNoConvergence) if an iteration fails to settle and
/// Error(kInternal) for degree < 1.
RootSet roots(const RationalPolynomial& p, const RootOptions& options = {});

/// Aberth-Ehrlich on complex coefficients (index = power), followed by
/// distance clustering. Coefficients must have a nonzero leading entry.
RootSet roots(std::span<const std::complex<double>> coefficients,
              const RootOptions& options = {});

}  // namespace qgraph
