// Copyright 2026 The degen Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DEGEN_LINALG_HPP_
#define DEGEN_LINALG_HPP_

#include <Eigen/Core>

#include <optional>
#include <stdexcept>

namespace degen {

// Exact Gaussian elimination over any field scalar. Pivoting picks the first
// nonzero entry in the column; magnitude-based pivoting is meaningless in
// exact arithmetic.
template <typename Derived>
typename Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic>
rowEchelonForm(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> m = input;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index i = row; i < m.rows(); ++i) {
      if (m(i, col) != Scalar(0)) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != row) m.row(pivot).swap(m.row(row));
    for (Eigen::Index i = row + 1; i < m.rows(); ++i) {
      if (m(i, col) != Scalar(0)) {
        Scalar factor = m(i, col) / m(row, col);
        m.row(i) -= factor * m.row(row);
      }
    }
    ++row;
  }
  return m;
}

template <typename Derived>
Eigen::Index rankOf(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  auto echelon = rowEchelonForm(input);
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < echelon.rows(); ++i) {
    bool nonzero = false;
    for (Eigen::Index j = 0; j < echelon.cols(); ++j) {
      if (echelon(i, j) != Scalar(0)) {
        nonzero = true;
        break;
      }
    }
    if (nonzero) ++rank;
  }
  return rank;
}

// Exact solve of a square system A x = b; std::nullopt when A is singular.
template <typename DerivedA, typename DerivedB>
std::optional<Eigen::Matrix<typename DerivedA::Scalar, Eigen::Dynamic, 1>>
solveSquare(const Eigen::MatrixBase<DerivedA>& a,
            const Eigen::MatrixBase<DerivedB>& b) {
  using Scalar = typename DerivedA::Scalar;
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  const Eigen::Index n = a.rows();
  if (a.cols() != n || b.size() != n)
    throw std::invalid_argument("solveSquare: dimension mismatch");

  Matrix m(n, n + 1);
  m.leftCols(n) = a;
  m.col(n) = b;
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index i = col; i < n; ++i) {
      if (m(i, col) != Scalar(0)) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) return std::nullopt;
    if (pivot != col) m.row(pivot).swap(m.row(col));
    for (Eigen::Index i = col + 1; i < n; ++i) {
      if (m(i, col) != Scalar(0)) {
        Scalar factor = m(i, col) / m(col, col);
        m.row(i) -= factor * m.row(col);
      }
    }
  }
  Vector x(n);
  for (Eigen::Index i = n - 1; i >= 0; --i) {
    Scalar sum = m(i, n);
    for (Eigen::Index j = i + 1; j < n; ++j) sum -= m(i, j) * x(j);
    x(i) = sum / m(i, i);
  }
  return x;
}

}  // namespace degen

#endif  // DEGEN_LINALG_HPP_
