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
#include <string>

#include "qgraph/rational.hpp"

namespace qgraph {

/// "a+bi" with 12 significant digits; negative zero prints as 0.
std::string format_complex(std::complex<double> z, int digits = 12);

/// Real number with the same rules as format_complex.
std::string format_real(double x, int digits = 12);

/// A length that is a rational multiple of ell, e.g. "ℓ", "5/2·ℓ", "0".
std::string format_in_ell(const Rational& multiple);

}  // namespace qgraph
