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

#pragma once

#include <Eigen/Dense>

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "luorbit/state.hpp"

namespace luorbit {

/// su(2) basis: A = i sigma_z, B = i sigma_y, C = i sigma_x.
enum class Generator { A = 0, B = 1, C = 2 };

inline constexpr std::array<Generator, 3> kGenerators = {Generator::A, Generator::B, Generator::C};

/// Applies generator g on qubit k to an amplitude array by index arithmetic:
///   A_k: c_I -> i (-1)^{i_k} c_I
///   B_k: c_I -> (-1)^{i_k} c_{I_k}
///   C_k: c_I -> i c_{I_k}
template <class T>
std::vector<T> apply_generator(Generator g, std::span<const T> amplitudes, int n, int k) {
  check_position(n, k);
  const Code mask = qubit_mask(n, k);
  std::vector<T> out(amplitudes.size());
  for (Code code = 0; code < amplitudes.size(); ++code) {
    const bool one = (code & mask) != 0;
    switch (g) {
      case Generator::A: {
        T v = times_i(amplitudes[code]);
        out[code] = one ? T(-v) : v;
        break;
      }
      case Generator::B: {
        const T& v = amplitudes[code ^ mask];
        out[code] = one ? T(-v) : v;
        break;
      }
      case Generator::C:
        out[code] = times_i(amplitudes[code ^ mask]);
        break;
    }
  }
  return out;
}

std::vector<Complex> apply_A(const StateVector& psi, int k);
std::vector<Complex> apply_B(const StateVector& psi, int k);
std::vector<Complex> apply_C(const StateVector& psi, int k);

/// Column index (0-based) of generator g of triple k (1-based) in M.
constexpr int column_index(int k, Generator g) { return 3 * (k - 1) + static_cast<int>(g); }

/// The 2^n x (3n+1) matrix M = (A_1 psi, B_1 psi, C_1 psi, ..., C_n psi, -i psi).
///
/// For exact-mode states the exact columns are built from the unnormalized
/// representative; the double columns always come from the unit-norm
/// amplitudes.
class SideMatrix {
 public:
  explicit SideMatrix(const StateVector& psi);

  int qubits() const { return source_.qubits(); }
  int column_count() const { return 3 * qubits() + 1; }
  int last_column() const { return 3 * qubits(); }

  const Eigen::MatrixXcd& columns() const { return columns_; }
  Eigen::VectorXcd column(int index) const { return columns_.col(index); }
  Eigen::VectorXcd column(int k, Generator g) const { return columns_.col(column_index(k, g)); }

  bool has_exact() const { return exact_columns_.has_value(); }
  /// Throws std::logic_error if the source state is not exact.
  const std::vector<std::vector<GaussianRational>>& exact_columns() const;

  const StateVector& source() const { return source_; }

 private:
  StateVector source_;
  Eigen::MatrixXcd columns_;
  std::optional<std::vector<std::vector<GaussianRational>>> exact_columns_;
};

/// Throws ZeroVectorError for a zero state (unreachable through StateVector,
/// kept for the contract).
SideMatrix side_matrix(const StateVector& psi);

/// Real image of complex columns: z_j = a_j + i b_j becomes rows (a_j, b_j).
/// The Euclidean dot product of two real columns is Re<u|v>.
using RealView = Eigen::MatrixXd;
RealView real_view(const Eigen::MatrixXcd& columns);
RealView real_view(std::span<const Complex> vector);

/// Exact real view, one inner vector per selected column.
std::vector<std::vector<mpq_class>> exact_real_view(
    const std::vector<std::vector<GaussianRational>>& columns, std::span<const int> selected);

}  // namespace luorbit
