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

#include "luorbit/state.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "luorbit/errors.hpp"
#include "luorbit/random.hpp"

namespace luorbit {
namespace {

int qubits_for_length(std::size_t length) {
  if (length < 2 || !std::has_single_bit(length)) {
    throw std::invalid_argument("amplitude count " + std::to_string(length) + " is not 2^n with n >= 1");
  }
  const int n = std::countr_zero(length);
  check_qubit_count(n);
  return n;
}

}  // namespace

StateVector::StateVector(int n, std::vector<Complex> amplitudes, std::optional<ExactData> exact)
    : n_(n), amplitudes_(std::move(amplitudes)), exact_(std::move(exact)) {}

StateVector StateVector::from_amplitudes(std::vector<Complex> amplitudes) {
  const int n = qubits_for_length(amplitudes.size());
  double norm2 = 0.0;
  for (const auto& c : amplitudes) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
      throw std::invalid_argument("amplitudes must be finite");
    }
    norm2 += std::norm(c);
  }
  if (norm2 == 0.0) throw ZeroVectorError();
  const double scale = 1.0 / std::sqrt(norm2);
  for (auto& c : amplitudes) c *= scale;
  return StateVector(n, std::move(amplitudes), std::nullopt);
}

StateVector StateVector::from_exact(std::vector<GaussianRational> amplitudes) {
  const int n = qubits_for_length(amplitudes.size());
  mpq_class norm2 = 0;
  for (const auto& c : amplitudes) norm2 += c.norm2();
  if (sgn(norm2) == 0) throw ZeroVectorError();
  std::vector<Complex> values(amplitudes.size());
  const double inv_norm = 1.0 / std::sqrt(norm2.get_d());
  for (std::size_t i = 0; i < amplitudes.size(); ++i) values[i] = amplitudes[i].to_complex() * inv_norm;
  double check = 0.0;
  for (const auto& v : values) check += std::norm(v);
  if (!(check > 0.0) || !std::isfinite(check)) {
    throw std::invalid_argument("exact amplitudes are outside double range");
  }
  // Second pass absorbs the rounding of the first.
  const double fix = 1.0 / std::sqrt(check);
  for (auto& v : values) v *= fix;
  return StateVector(n, std::move(values), ExactData{std::move(amplitudes), std::move(norm2)});
}

const Complex& StateVector::amplitude(const MultiIndex& index) const {
  if (index.qubits() != n_) throw std::invalid_argument("multi-index length does not match qubit count");
  return amplitudes_[index.code()];
}

std::span<const GaussianRational> StateVector::exact_amplitudes() const {
  if (!exact_) throw std::logic_error("state has no exact representative");
  return exact_->amplitudes;
}

const mpq_class& StateVector::exact_squared_norm() const {
  if (!exact_) throw std::logic_error("state has no exact representative");
  return exact_->squared_norm;
}

StateVector StateVector::as_float() const { return StateVector(n_, amplitudes_, std::nullopt); }

StateVector basis_state(int n, const MultiIndex& index) {
  check_qubit_count(n);
  if (index.qubits() != n) throw std::out_of_range("multi-index length does not match qubit count");
  std::vector<GaussianRational> amps(Code{1} << n);
  amps[index.code()] = GaussianRational(1);
  return StateVector::from_exact(std::move(amps));
}

StateVector tensor(const StateVector& first, const StateVector& second) {
  const int n = first.qubits() + second.qubits();
  check_qubit_count(n);
  const std::size_t d2 = second.dimension();
  if (first.is_exact() && second.is_exact()) {
    auto a = first.exact_amplitudes();
    auto b = second.exact_amplitudes();
    std::vector<GaussianRational> out(first.dimension() * d2);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i].is_zero()) continue;
      for (std::size_t j = 0; j < d2; ++j) out[i * d2 + j] = a[i] * b[j];
    }
    return StateVector::from_exact(std::move(out));
  }
  auto a = first.amplitudes();
  auto b = second.amplitudes();
  std::vector<Complex> out(first.dimension() * d2);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < d2; ++j) out[i * d2 + j] = a[i] * b[j];
  }
  return StateVector::from_amplitudes(std::move(out));
}

namespace {

std::vector<Code> permuted_codes(int n, std::span<const int> target) {
  if (static_cast<int>(target.size()) != n) throw std::invalid_argument("permutation length mismatch");
  std::vector<int> seen(static_cast<std::size_t>(n) + 1, 0);
  for (int t : target) {
    if (t < 1 || t > n || seen[t]++) throw std::invalid_argument("target is not a permutation of 1..n");
  }
  std::vector<Code> codes(Code{1} << n);
  for (Code src = 0; src < codes.size(); ++src) {
    Code dst = 0;
    for (int q = 1; q <= n; ++q) {
      if (bit_of(src, n, q)) dst |= qubit_mask(n, target[q - 1]);
    }
    codes[src] = dst;
  }
  return codes;
}

}  // namespace

StateVector permute_qubits(const StateVector& psi, std::span<const int> target) {
  const auto codes = permuted_codes(psi.qubits(), target);
  if (psi.is_exact()) {
    auto src = psi.exact_amplitudes();
    std::vector<GaussianRational> out(src.size());
    for (Code c = 0; c < src.size(); ++c) out[codes[c]] = src[c];
    return StateVector::from_exact(std::move(out));
  }
  auto src = psi.amplitudes();
  std::vector<Complex> out(src.size());
  for (Code c = 0; c < src.size(); ++c) out[codes[c]] = src[c];
  return StateVector::from_amplitudes(std::move(out));
}

StateVector singlet_product(int n, const std::vector<QubitPair>& pairs, std::optional<int> lone) {
  check_qubit_count(n);
  SingletPairing(pairs, lone).validate(n);
  std::vector<GaussianRational> amps(Code{1} << n);
  for (Code code = 0; code < amps.size(); ++code) {
    bool on = !(lone && bit_of(code, n, *lone));
    for (const auto& p : pairs) {
      if (!on) break;
      on = bit_of(code, n, p.first) == bit_of(code, n, p.second);
    }
    if (on) amps[code] = GaussianRational(1);
  }
  return StateVector::from_exact(std::move(amps));
}

StateVector ghz_state(int n) {
  check_qubit_count(n);
  std::vector<GaussianRational> amps(Code{1} << n);
  amps.front() = GaussianRational(1);
  amps.back() = GaussianRational(1);
  return StateVector::from_exact(std::move(amps));
}

StateVector w_state(int n) {
  check_qubit_count(n);
  std::vector<GaussianRational> amps(Code{1} << n);
  for (int k = 1; k <= n; ++k) amps[qubit_mask(n, k)] = GaussianRational(1);
  return StateVector::from_exact(std::move(amps));
}

StateVector random_state(int n, std::uint64_t seed) {
  check_qubit_count(n);
  Rng rng(seed);
  std::vector<Complex> amps(Code{1} << n);
  for (auto& c : amps) {
    const double re = rng.normal();
    const double im = rng.normal();
    c = {re, im};
  }
  return StateVector::from_amplitudes(std::move(amps));
}

StateVector contract_pair(const StateVector& psi, int l, int l_prime, double tol) {
  const int n = psi.qubits();
  check_position(n, l);
  check_position(n, l_prime);
  if (l == l_prime) throw std::invalid_argument("contract_pair needs two distinct qubits");
  if (n < 3) throw std::invalid_argument("contract_pair needs at least three qubits");
  const Code ml = qubit_mask(n, l);
  const Code mr = qubit_mask(n, l_prime);
  const int m = n - 2;
  std::vector<Complex> out(Code{1} << m);
  for (Code rest = 0; rest < out.size(); ++rest) {
    // Spread the (n-2) remaining bits over the positions other than l, l'.
    Code full = 0;
    int src_bit = m;
    for (int k = 1; k <= n; ++k) {
      if (k == l || k == l_prime) continue;
      --src_bit;
      if ((rest >> src_bit) & 1) full |= qubit_mask(n, k);
    }
    out[rest] = (psi[full] + psi[full | ml | mr]) * M_SQRT1_2;
  }
  double norm2 = 0.0;
  for (const auto& c : out) norm2 += std::norm(c);
  if (std::sqrt(norm2) <= tol) {
    throw ZeroResidualError("contraction with the canonical pair state on qubits " + std::to_string(l) + "," +
                            std::to_string(l_prime) + " vanishes");
  }
  return StateVector::from_amplitudes(std::move(out));
}

Complex inner_product(const StateVector& a, const StateVector& b) {
  if (a.dimension() != b.dimension()) throw std::invalid_argument("inner product of states of different size");
  Complex sum = 0.0;
  for (std::size_t i = 0; i < a.dimension(); ++i) sum += std::conj(a[i]) * b[i];
  return sum;
}

bool equal_up_to_phase(const StateVector& a, const StateVector& b, double tol) {
  if (a.qubits() != b.qubits()) return false;
  return std::abs(inner_product(a, b)) >= 1.0 - tol;
}

}  // namespace luorbit
