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
#include <cstdint>
#include <span>
#include <vector>

#include "luorbit/state.hpp"

namespace luorbit {

using Su2 = Eigen::Matrix2cd;

inline constexpr double kUnitaryTolerance = 1e-12;

/// U^dagger U = 1 and det U = 1, both within tol.
bool is_special_unitary(const Su2& u, double tol = kUnitaryTolerance);

/// Haar-random SU(2) from a normalized Gaussian quaternion (a, b, c, d):
///   [[a + ib,  c + id],
///    [-c + id, a - ib]]
Su2 random_su2(std::uint64_t seed);

/// Element U_1 (x) ... (x) U_n of SU(2)^n.
class LocalUnitary {
 public:
  /// Throws std::invalid_argument if any factor is not special unitary.
  explicit LocalUnitary(std::vector<Su2> factors);

  static LocalUnitary identity(int n);
  /// Factor k is random_su2(derive_seed(seed, k)).
  static LocalUnitary random(int n, std::uint64_t seed);

  int qubits() const { return static_cast<int>(factors_.size()); }
  const Su2& factor(int k) const { return factors_.at(k - 1); }
  const std::vector<Su2>& factors() const { return factors_; }

 private:
  std::vector<Su2> factors_;
};

/// Applies a 2x2 matrix to qubit k in place.
template <class T, class Matrix>
void apply_single_qubit(std::span<T> amplitudes, int n, int k, const Matrix& u) {
  const Code mask = qubit_mask(n, k);
  for (Code code = 0; code < amplitudes.size(); ++code) {
    if (code & mask) continue;
    T zero = amplitudes[code];
    T one = amplitudes[code | mask];
    amplitudes[code] = u(0, 0) * zero + u(0, 1) * one;
    amplitudes[code | mask] = u(1, 0) * zero + u(1, 1) * one;
  }
}

/// (U_1 (x) ... (x) U_n) psi in O(n 2^n). The result is float mode.
StateVector apply_local(const StateVector& psi, const LocalUnitary& u);

/// SU(2) element with Gaussian-rational entries, built from an integer
/// quaternion whose squared norm is a perfect square.
struct RationalSu2 {
  std::array<GaussianRational, 4> entries;  // row major
  const GaussianRational& operator()(int r, int c) const { return entries[2 * r + c]; }

  /// (a, b, c, d) / s with a^2 + b^2 + c^2 + d^2 = s^2. Throws
  /// std::invalid_argument otherwise.
  static RationalSu2 from_quaternion(long a, long b, long c, long d);
  Su2 to_double() const;
};

/// Exact counterpart of apply_local; keeps the state in exact mode.
StateVector apply_local_exact(const StateVector& psi, std::span<const RationalSu2> factors);

/// Matrix of X -> U^dagger X U in the ordered basis (A, B, C). Special
/// orthogonal; Ad(UV) = Ad(V) Ad(U) in this convention. Throws
/// std::invalid_argument if U is not special unitary.
Eigen::Matrix3d adjoint_rep(const Su2& u);

/// The su(2) basis matrices A, B, C as 2x2 complex matrices.
const std::array<Eigen::Matrix2cd, 3>& su2_basis();

}  // namespace luorbit
