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

#include "luorbit/lie_action.hpp"

#include <stdexcept>

#include "luorbit/errors.hpp"

namespace luorbit {

std::vector<Complex> apply_A(const StateVector& psi, int k) {
  return apply_generator<Complex>(Generator::A, psi.amplitudes(), psi.qubits(), k);
}

std::vector<Complex> apply_B(const StateVector& psi, int k) {
  return apply_generator<Complex>(Generator::B, psi.amplitudes(), psi.qubits(), k);
}

std::vector<Complex> apply_C(const StateVector& psi, int k) {
  return apply_generator<Complex>(Generator::C, psi.amplitudes(), psi.qubits(), k);
}

SideMatrix::SideMatrix(const StateVector& psi) : source_(psi) {
  const int n = psi.qubits();
  const auto dim = static_cast<Eigen::Index>(psi.dimension());
  columns_.resize(dim, 3 * n + 1);
  for (int k = 1; k <= n; ++k) {
    for (Generator g : kGenerators) {
      const auto col = apply_generator<Complex>(g, psi.amplitudes(), n, k);
      columns_.col(column_index(k, g)) = Eigen::Map<const Eigen::VectorXcd>(col.data(), dim);
    }
  }
  for (Eigen::Index i = 0; i < dim; ++i) columns_(i, 3 * n) = -times_i(psi[static_cast<Code>(i)]);

  if (psi.is_exact()) {
    const auto amps = psi.exact_amplitudes();
    std::vector<std::vector<GaussianRational>> exact;
    exact.reserve(3 * n + 1);
    for (int k = 1; k <= n; ++k) {
      for (Generator g : kGenerators) exact.push_back(apply_generator<GaussianRational>(g, amps, n, k));
    }
    std::vector<GaussianRational> last(amps.size());
    for (std::size_t i = 0; i < amps.size(); ++i) last[i] = -amps[i].times_i();
    exact.push_back(std::move(last));
    exact_columns_ = std::move(exact);
  }
}

const std::vector<std::vector<GaussianRational>>& SideMatrix::exact_columns() const {
  if (!exact_columns_) throw std::logic_error("side matrix of a float-mode state has no exact columns");
  return *exact_columns_;
}

SideMatrix side_matrix(const StateVector& psi) {
  bool zero = true;
  for (const auto& c : psi.amplitudes()) {
    if (c != Complex(0.0)) {
      zero = false;
      break;
    }
  }
  if (zero) throw ZeroVectorError();
  return SideMatrix(psi);
}

RealView real_view(const Eigen::MatrixXcd& columns) {
  RealView out(2 * columns.rows(), columns.cols());
  for (Eigen::Index c = 0; c < columns.cols(); ++c) {
    for (Eigen::Index r = 0; r < columns.rows(); ++r) {
      out(2 * r, c) = columns(r, c).real();
      out(2 * r + 1, c) = columns(r, c).imag();
    }
  }
  return out;
}

RealView real_view(std::span<const Complex> vector) {
  RealView out(2 * static_cast<Eigen::Index>(vector.size()), 1);
  for (std::size_t j = 0; j < vector.size(); ++j) {
    out(2 * j, 0) = vector[j].real();
    out(2 * j + 1, 0) = vector[j].imag();
  }
  return out;
}

std::vector<std::vector<mpq_class>> exact_real_view(const std::vector<std::vector<GaussianRational>>& columns,
                                                    std::span<const int> selected) {
  std::vector<std::vector<mpq_class>> out;
  out.reserve(selected.size());
  for (int index : selected) {
    const auto& col = columns.at(static_cast<std::size_t>(index));
    std::vector<mpq_class> real(2 * col.size());
    for (std::size_t j = 0; j < col.size(); ++j) {
      real[2 * j] = col[j].re;
      real[2 * j + 1] = col[j].im;
    }
    out.push_back(std::move(real));
  }
  return out;
}

}  // namespace luorbit
