// Copyright 2026 The luorbit Authors
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

// Reference computations used only by the tests. Everything here goes
// through dense matrices or brute-force enumeration, never through the
// index-arithmetic paths of the library.

#pragma once

#include <Eigen/Dense>
#include <gmpxx.h>

#include <complex>
#include <vector>

#include "luorbit/state.hpp"

namespace luorbit::oracle {

inline Eigen::VectorXcd vec(const StateVector& psi) {
  Eigen::VectorXcd v(static_cast<Eigen::Index>(psi.dimension()));
  for (std::size_t i = 0; i < psi.dimension(); ++i) v(static_cast<Eigen::Index>(i)) = psi[i];
  return v;
}

inline Eigen::VectorXcd vec(const std::vector<Complex>& c) {
  return Eigen::Map<const Eigen::VectorXcd>(c.data(), static_cast<Eigen::Index>(c.size()));
}

inline Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  }
  return out;
}

/// 1 (x) ... (x) op (x) ... (x) 1 with op in slot k (qubit 1 leftmost).
inline Eigen::MatrixXcd embed(const Eigen::Matrix2cd& op, int n, int k) {
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(1, 1);
  for (int j = 1; j <= n; ++j) out = kron(out, j == k ? Eigen::MatrixXcd(op) : Eigen::MatrixXcd::Identity(2, 2));
  return out;
}

inline Eigen::Matrix2cd pauli_x() {
  Eigen::Matrix2cd m;
  m << 0, 1, 1, 0;
  return m;
}
inline Eigen::Matrix2cd pauli_y() {
  Eigen::Matrix2cd m;
  m << 0, Complex(0, -1), Complex(0, 1), 0;
  return m;
}
inline Eigen::Matrix2cd pauli_z() {
  Eigen::Matrix2cd m;
  m << 1, 0, 0, -1;
  return m;
}

inline double real_dot(const Eigen::VectorXcd& u, const Eigen::VectorXcd& v) {
  double s = 0.0;
  for (Eigen::Index i = 0; i < u.size(); ++i) s += u(i).real() * v(i).real() + u(i).imag() * v(i).imag();
  return s;
}

/// Rank of a real matrix by Gaussian elimination with partial pivoting,
/// relative threshold against the largest column norm.
inline int gauss_rank(Eigen::MatrixXd a, double tol) {
  double scale = 0.0;
  for (Eigen::Index c = 0; c < a.cols(); ++c) scale = std::max(scale, a.col(c).norm());
  if (scale == 0.0) return 0;
  int rank = 0;
  for (Eigen::Index c = 0; c < a.cols() && rank < a.rows(); ++c) {
    Eigen::Index piv = rank;
    for (Eigen::Index r = rank; r < a.rows(); ++r) {
      if (std::abs(a(r, c)) > std::abs(a(piv, c))) piv = r;
    }
    if (std::abs(a(piv, c)) <= tol * scale) continue;
    a.row(piv).swap(a.row(rank));
    for (Eigen::Index r = rank + 1; r < a.rows(); ++r) a.row(r) -= (a(r, c) / a(rank, c)) * a.row(rank);
    ++rank;
  }
  return rank;
}

/// Real rank of complex columns through their (re, im) images, by Gram-free
/// Gaussian elimination.
inline int complex_columns_real_rank(const std::vector<Eigen::VectorXcd>& cols, double tol = 1e-9) {
  if (cols.empty()) return 0;
  Eigen::MatrixXd a(2 * cols.front().size(), static_cast<Eigen::Index>(cols.size()));
  for (std::size_t c = 0; c < cols.size(); ++c) {
    for (Eigen::Index r = 0; r < cols[c].size(); ++r) {
      a(2 * r, c) = cols[c](r).real();
      a(2 * r + 1, c) = cols[c](r).imag();
    }
  }
  return gauss_rank(a, tol);
}

/// Exact rank over Q by plain rational Gaussian elimination.
inline int rational_rank(std::vector<std::vector<mpq_class>> rows) {
  int rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && sgn(rows[piv][c]) == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      const mpq_class f = rows[r][c] / rows[rank][c];
      for (std::size_t j = c; j < cols; ++j) rows[r][j] -= f * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

/// Amplitude of a product of factors placed on qubit groups, by enumeration.
inline Complex product_amplitude(Code code, int n, const std::vector<std::vector<int>>& groups,
                                 const std::vector<StateVector>& factors) {
  Complex amp = 1.0;
  for (std::size_t f = 0; f < groups.size(); ++f) {
    Code local = 0;
    for (int q : groups[f]) local = (local << 1) | static_cast<Code>(bit_of(code, n, q));
    amp *= factors[f][local];
  }
  return amp;
}

}  // namespace luorbit::oracle
