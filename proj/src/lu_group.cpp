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

#include "luorbit/lu_group.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "luorbit/random.hpp"

namespace luorbit {

bool is_special_unitary(const Su2& u, double tol) {
  const Eigen::Matrix2cd gram = u.adjoint() * u;
  if ((gram - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff() > tol) return false;
  return std::abs(u.determinant() - Complex(1.0)) <= tol;
}

Su2 random_su2(std::uint64_t seed) {
  Rng rng(seed);
  double q[4];
  double norm2 = 0.0;
  do {
    norm2 = 0.0;
    for (double& x : q) {
      x = rng.normal();
      norm2 += x * x;
    }
  } while (norm2 == 0.0);
  const double s = 1.0 / std::sqrt(norm2);
  const double a = q[0] * s, b = q[1] * s, c = q[2] * s, d = q[3] * s;
  Su2 u;
  u << Complex(a, b), Complex(c, d), Complex(-c, d), Complex(a, -b);
  return u;
}

LocalUnitary::LocalUnitary(std::vector<Su2> factors) : factors_(std::move(factors)) {
  for (std::size_t k = 0; k < factors_.size(); ++k) {
    if (!is_special_unitary(factors_[k])) {
      throw std::invalid_argument("local unitary factor " + std::to_string(k + 1) + " is not in SU(2)");
    }
  }
}

LocalUnitary LocalUnitary::identity(int n) {
  check_qubit_count(n);
  return LocalUnitary(std::vector<Su2>(static_cast<std::size_t>(n), Su2::Identity()));
}

LocalUnitary LocalUnitary::random(int n, std::uint64_t seed) {
  check_qubit_count(n);
  std::vector<Su2> factors;
  factors.reserve(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) factors.push_back(random_su2(derive_seed(seed, static_cast<std::uint64_t>(k))));
  return LocalUnitary(std::move(factors));
}

StateVector apply_local(const StateVector& psi, const LocalUnitary& u) {
  const int n = psi.qubits();
  if (u.qubits() != n) {
    throw std::invalid_argument("local unitary has " + std::to_string(u.qubits()) + " factors for a " +
                                std::to_string(n) + "-qubit state");
  }
  std::vector<Complex> amps(psi.amplitudes().begin(), psi.amplitudes().end());
  for (int k = 1; k <= n; ++k) apply_single_qubit<Complex>(amps, n, k, u.factor(k));
  return StateVector::from_amplitudes(std::move(amps));
}

RationalSu2 RationalSu2::from_quaternion(long a, long b, long c, long d) {
  const mpz_class norm2 = mpz_class(a) * a + mpz_class(b) * b + mpz_class(c) * c + mpz_class(d) * d;
  mpz_class s = sqrt(norm2);
  if (sgn(norm2) == 0 || s * s != norm2) {
    throw std::invalid_argument("quaternion norm is not a perfect square");
  }
  auto q = [&](long x) { return mpq_class(mpz_class(x), s); };
  RationalSu2 u;
  u.entries = {GaussianRational(q(a), q(b)), GaussianRational(q(c), q(d)), GaussianRational(q(-c), q(d)),
               GaussianRational(q(a), q(-b))};
  return u;
}

Su2 RationalSu2::to_double() const {
  Su2 u;
  u << entries[0].to_complex(), entries[1].to_complex(), entries[2].to_complex(), entries[3].to_complex();
  return u;
}

StateVector apply_local_exact(const StateVector& psi, std::span<const RationalSu2> factors) {
  const int n = psi.qubits();
  if (static_cast<int>(factors.size()) != n) throw std::invalid_argument("factor count does not match qubit count");
  const auto src = psi.exact_amplitudes();
  std::vector<GaussianRational> amps(src.begin(), src.end());
  for (int k = 1; k <= n; ++k) apply_single_qubit<GaussianRational>(amps, n, k, factors[k - 1]);
  return StateVector::from_exact(std::move(amps));
}

const std::array<Eigen::Matrix2cd, 3>& su2_basis() {
  static const std::array<Eigen::Matrix2cd, 3> basis = [] {
    const Complex i(0.0, 1.0);
    Eigen::Matrix2cd a, b, c;
    a << i, 0.0, 0.0, -i;
    b << 0.0, 1.0, -1.0, 0.0;
    c << 0.0, i, i, 0.0;
    return std::array<Eigen::Matrix2cd, 3>{a, b, c};
  }();
  return basis;
}

Eigen::Matrix3d adjoint_rep(const Su2& u) {
  if (!is_special_unitary(u)) throw std::invalid_argument("adjoint_rep: matrix is not in SU(2)");
  const auto& basis = su2_basis();
  Eigen::Matrix3d r;
  for (int j = 0; j < 3; ++j) {
    const Eigen::Matrix2cd image = u.adjoint() * basis[j] * u;
    // The basis is orthonormal for <X, Y> = Re tr(X^dagger Y) / 2.
    for (int i = 0; i < 3; ++i) r(i, j) = 0.5 * (basis[i].adjoint() * image).trace().real();
  }
  return r;
}

}  // namespace luorbit
