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

#include <Eigen/Dense>

#include <cstddef>
#include <string>
#include <vector>

#include "qgraph/rational.hpp"

namespace qgraph {

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);

  static RationalMatrix identity(std::size_t n);
  static RationalMatrix square(std::size_t n) { return RationalMatrix(n, n); }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Rational trace() const;
  RationalMatrix transpose() const;
  bool column_is_zero(std::size_t c) const;
  bool is_zero() const;

  Eigen::MatrixXcd to_complex() const;

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix operator*(const Rational& s, const RationalMatrix& m);

struct DetRank {
  Rational det;
  std::size_t rank = 0;
};

/// Exact determinant and rank by fraction-free (Bareiss) elimination.
/// Rows are first scaled to integers; columns without a pivot are skipped,
/// so the echelon entries stay integral minors and rank falls out directly.
DetRank det_rank(const RationalMatrix& m);

/// Rows joined by newlines, entries as "p/q" separated by single spaces.
std::string to_string(const RationalMatrix& m);

}  // namespace qgraph
