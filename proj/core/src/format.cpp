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

#include "qgraph/format.hpp"

#include <cstdio>

namespace qgraph {

std::string format_real(double x, int digits) {
  if (x == 0) x = 0;  // drops the sign of -0
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return buf;
}

std::string format_complex(std::complex<double> z, int digits) {
  const double im = z.imag() == 0 ? 0.0 : z.imag();
  std::string out = format_real(z.real(), digits);
  if (im < 0) {
    out += "-" + format_real(-im, digits);
  } else {
    out += "+" + format_real(im, digits);
  }
  return out + "i";
}

std::string format_in_ell(const Rational& multiple) {
  if (multiple == 0) return "0";
  if (multiple == 1) return "ℓ";
  return to_string(multiple) + "·ℓ";
}

}  // namespace qgraph
