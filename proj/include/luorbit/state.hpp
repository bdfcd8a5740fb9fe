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

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "luorbit/gaussian_rational.hpp"
#include "luorbit/multi_index.hpp"
#include "luorbit/pairing.hpp"

namespace luorbit {

using Complex = std::complex<double>;

enum class NumericMode { Float, Exact };

/// n-qubit pure state vector.
///
/// Float mode holds unit-norm double amplitudes. Exact mode additionally
/// keeps an unnormalized Gaussian-rational representative together with its
/// squared norm; the double amplitudes are then its normalized image. Rank
/// computations are scale invariant, so the exact backend works directly on
/// the representative.
class StateVector {
 public:
  /// Normalizes. Throws ZeroVectorError for a zero vector and
  /// std::invalid_argument if the length is not a power of two.
  static StateVector from_amplitudes(std::vector<Complex> amplitudes);
  static StateVector from_exact(std::vector<GaussianRational> amplitudes);

  int qubits() const { return n_; }
  std::size_t dimension() const { return amplitudes_.size(); }
  NumericMode mode() const { return exact_ ? NumericMode::Exact : NumericMode::Float; }
  bool is_exact() const { return exact_.has_value(); }

  std::span<const Complex> amplitudes() const { return amplitudes_; }
  const Complex& operator[](Code code) const { return amplitudes_[code]; }
  const Complex& amplitude(const MultiIndex& index) const;

  /// Unnormalized representative. Throws std::logic_error in float mode.
  std::span<const GaussianRational> exact_amplitudes() const;
  const mpq_class& exact_squared_norm() const;

  /// Copy of this state with the exact representative dropped.
  StateVector as_float() const;

 private:
  struct ExactData {
    std::vector<GaussianRational> amplitudes;
    mpq_class squared_norm;
  };

  StateVector(int n, std::vector<Complex> amplitudes, std::optional<ExactData> exact);

  int n_;
  std::vector<Complex> amplitudes_;
  std::optional<ExactData> exact_;
};

/// Computational basis state |I>. Exact mode.
StateVector basis_state(int n, const MultiIndex& index);

/// psi1 (x) psi2, psi1's qubits first. Exact only if both inputs are exact.
StateVector tensor(const StateVector& first, const StateVector& second);

/// Reorders qubits: source qubit q (1-based) moves to position target[q-1].
/// `target` must be a permutation of 1..n.
StateVector permute_qubits(const StateVector& psi, std::span<const int> target);

/// Canonical pair state (|00>+|11>)/sqrt2 on every pair and |0> on the lone
/// qubit. Exact mode (the representative has unit amplitudes).
StateVector singlet_product(int n, const std::vector<QubitPair>& pairs, std::optional<int> lone);
inline StateVector singlet_product(int n, const SingletPairing& pairing) {
  return singlet_product(n, pairing.pairs, pairing.lone);
}

/// (|0...0> + |1...1>)/sqrt2, exact mode.
StateVector ghz_state(int n);
/// Equal superposition of the weight-one basis states, exact mode.
StateVector w_state(int n);

/// Haar-uniform: 2^(n+1) standard Gaussians, normalized.
StateVector random_state(int n, std::uint64_t seed);

/// <s'|_{l,l'} psi normalized, remaining qubits in their original order.
/// Throws ZeroResidualError if the partial inner product vanishes
/// (relative threshold `tol`).
StateVector contract_pair(const StateVector& psi, int l, int l_prime, double tol = 1e-10);

/// <a|b>.
Complex inner_product(const StateVector& a, const StateVector& b);

/// |<a|b>| >= 1 - tol for unit vectors.
bool equal_up_to_phase(const StateVector& a, const StateVector& b, double tol = 1e-10);

}  // namespace luorbit
