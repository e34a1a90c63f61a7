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

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace qgraph {

/// Arbitrary-precision rational, always kept canonical (den > 0, gcd = 1).
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses a decimal literal ("2", "-0.125", "1.5e-3") or a fraction ("3/4")
/// exactly. Throws Error(kParse) on malformed input.
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

/// Always "p/q" (integers get "/1"); the record format.
std::string to_fraction_string(const Rational& value);

double to_double(const Rational& value);

/// num / den in lowest terms.
Rational ratio(long num, long den);

}  // namespace qgraph
