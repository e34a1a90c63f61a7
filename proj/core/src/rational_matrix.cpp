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

#include "qgraph/rational_matrix.hpp"

#include <sstream>
#include <utility>

#include "qgraph/errors.hpp"

namespace qgraph {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Rational RationalMatrix::trace() const {
  Rational t = 0;
  for (std::size_t i = 0; i < rows_ && i < cols_; ++i) t += (*this)(i, i);
  return t;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool RationalMatrix::column_is_zero(std::size_t c) const {
  for (std::size_t r = 0; r < rows_; ++r)
    if (sgn((*this)(r, c)) != 0) return false;
  return true;
}

bool RationalMatrix::is_zero() const {
  for (const auto& v : data_)
    if (sgn(v) != 0) return false;
  return true;
}

Eigen::MatrixXcd RationalMatrix::to_complex() const {
  Eigen::MatrixXcd m(static_cast<Eigen::Index>(rows_), static_cast<Eigen::Index>(cols_));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = (*this)(r, c).get_d();
  return m;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorCode::kInternal, "matrix product shape mismatch");
  RationalMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (sgn(b(k, j)) != 0) out(i, j) += aik * b(k, j);
      }
    }
  }
  return out;
}

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw Error(ErrorCode::kInternal, "matrix sum shape mismatch");
  RationalMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) + b(i, j);
  return out;
}

RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw Error(ErrorCode::kInternal, "matrix difference shape mismatch");
  RationalMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) - b(i, j);
  return out;
}

RationalMatrix operator*(const Rational& s, const RationalMatrix& m) {
  RationalMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = s * m(i, j);
  return out;
}

DetRank det_rank(const RationalMatrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::kInternal, "det_rank needs a square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return {Rational(1), 0};

  // Scale each row by the lcm of its denominators; det(m) = det(a) / scale.
  std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
  Integer scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    Integer row_lcm = 1;
    for (std::size_t j = 0; j < n; ++j) mpz_lcm(row_lcm.get_mpz_t(), row_lcm.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j).get_num() * (row_lcm / m(i, j).get_den());
    scale *= row_lcm;
  }

  int sign = 1;
  Integer prev = 1;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < n && pivot_row < n; ++col) {
    std::size_t p = pivot_row;
    while (p < n && a[p][col] == 0) ++p;
    if (p == n) continue;
    if (p != pivot_row) {
      std::swap(a[p], a[pivot_row]);
      sign = -sign;
    }
    const Integer& piv = a[pivot_row][col];
    for (std::size_t i = pivot_row + 1; i < n; ++i) {
      for (std::size_t j = col + 1; j < n; ++j) {
        Integer t = piv * a[i][j] - a[i][col] * a[pivot_row][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][col] = 0;
    }
    prev = piv;
    ++pivot_row;
  }

  DetRank out;
  out.rank = pivot_row;
  if (pivot_row == n) {
    out.det = Rational(a[n - 1][n - 1] * sign, scale);
    out.det.canonicalize();
  } else {
    out.det = 0;
  }
  return out;
}

std::string to_string(const RationalMatrix& m) {
  std::ostringstream os;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << ' ';
      os << to_fraction_string(m(i, j));
    }
    if (i + 1 < m.rows()) os << '\n';
  }
  return os.str();
}

}  // namespace qgraph
