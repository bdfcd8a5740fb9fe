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

#include "luorbit/rank.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace luorbit {

std::string_view to_string(Backend backend) { return backend == Backend::Exact ? "exact" : "float"; }

Backend parse_backend(std::string_view text) {
  if (text == "float") return Backend::Float;
  if (text == "exact") return Backend::Exact;
  throw std::invalid_argument("unknown backend '" + std::string(text) + "' (expected float or exact)");
}

ColumnSelector::ColumnSelector(std::vector<int> triples, bool include_last)
    : triples_(std::move(triples)), include_last_(include_last) {
  std::sort(triples_.begin(), triples_.end());
  triples_.erase(std::unique(triples_.begin(), triples_.end()), triples_.end());
  if (!triples_.empty() && triples_.front() < 1) throw std::out_of_range("triple indices are 1-based");
}

ColumnSelector ColumnSelector::all(int n) {
  std::vector<int> t(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) t[k - 1] = k;
  return ColumnSelector(std::move(t), true);
}

bool ColumnSelector::contains_triple(int k) const {
  return std::binary_search(triples_.begin(), triples_.end(), k);
}

std::vector<int> ColumnSelector::column_indices(int n) const {
  std::vector<int> cols;
  cols.reserve(3 * triples_.size() + 1);
  for (int k : triples_) {
    check_position(n, k);
    for (Generator g : kGenerators) cols.push_back(column_index(k, g));
  }
  if (include_last_) cols.push_back(3 * n);
  return cols;
}

RankResult float_rank(const Eigen::MatrixXd& matrix, double tol) {
  RankResult result;
  result.backend = Backend::Float;
  if (matrix.size() == 0) return result;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(matrix);
  const Eigen::VectorXd& s = svd.singularValues();
  result.singular_values.assign(s.data(), s.data() + s.size());
  const double cutoff = tol * s(0);
  int rank = 0;
  // Strict comparison: a value exactly at the cutoff is discarded.
  while (rank < s.size() && s(rank) > cutoff) ++rank;
  result.rank = rank;
  if (rank > 0 && rank < s.size() && s(rank) > 0.0) result.gap_ratio = s(rank - 1) / s(rank);
  return result;
}

int exact_rank(const std::vector<std::vector<mpq_class>>& vectors) {
  if (vectors.empty()) return 0;
  const std::size_t rows = vectors.size();
  const std::size_t cols = vectors.front().size();
  // Clear denominators row by row; row scaling does not change the rank.
  std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    if (vectors[i].size() != cols) throw std::invalid_argument("exact_rank: ragged input");
    mpz_class lcm = 1;
    for (const auto& q : vectors[i]) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
    for (std::size_t j = 0; j < cols; ++j) {
      a[i][j] = vectors[i][j].get_num() * (lcm / vectors[i][j].get_den());
    }
  }

  std::size_t r = 0;
  mpz_class prev = 1;
  mpz_class t;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(a[p][c]) == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        t = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return static_cast<int>(r);
}

RankResult real_rank(const SideMatrix& m, const ColumnSelector& selection, const RankOptions& options) {
  if (selection.empty()) throw std::invalid_argument("real_rank: empty column selection");
  const auto cols = selection.column_indices(m.qubits());
  if (options.backend == Backend::Exact) {
    RankResult result;
    result.backend = Backend::Exact;
    result.rank = exact_rank(exact_real_view(m.exact_columns(), cols));
    return result;
  }
  Eigen::MatrixXcd selected(m.columns().rows(), static_cast<Eigen::Index>(cols.size()));
  for (std::size_t i = 0; i < cols.size(); ++i) selected.col(static_cast<Eigen::Index>(i)) = m.columns().col(cols[i]);
  return float_rank(real_view(selected), options.tol);
}

RankResult span_rank(const SideMatrix& m, std::span<const int> triples, bool include_last,
                     const RankOptions& options) {
  return real_rank(m, ColumnSelector(std::vector<int>(triples.begin(), triples.end()), include_last), options);
}

int span_dim(const SideMatrix& m, std::span<const int> triples, bool include_last, const RankOptions& options) {
  return span_rank(m, triples, include_last, options).rank;
}

namespace {

/// Orthonormal basis of the column space, from the thin left singular vectors.
Eigen::MatrixXd range_basis(const Eigen::MatrixXd& a, double tol) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeThinU);
  const auto& s = svd.singularValues();
  Eigen::Index rank = 0;
  if (s.size() > 0) {
    const double cutoff = tol * s(0);
    while (rank < s.size() && s(rank) > cutoff) ++rank;
  }
  return svd.matrixU().leftCols(rank);
}

Eigen::MatrixXd selected_real_view(const SideMatrix& m, const std::vector<int>& cols) {
  Eigen::MatrixXcd selected(m.columns().rows(), static_cast<Eigen::Index>(cols.size()));
  for (std::size_t i = 0; i < cols.size(); ++i) selected.col(static_cast<Eigen::Index>(i)) = m.columns().col(cols[i]);
  return real_view(selected);
}

}  // namespace

Eigen::MatrixXd complement_basis(const SideMatrix& m, int inside, const ColumnSelector& against, double tol) {
  const int n = m.qubits();
  check_position(n, inside);
  if (against.contains_triple(inside)) {
    throw std::invalid_argument("complement_dim: triple " + std::to_string(inside) + " is part of the selection");
  }
  const Eigen::MatrixXd inner = range_basis(selected_real_view(m, ColumnSelector({inside}, false).column_indices(n)), tol);
  if (against.empty()) return inner;
  const Eigen::MatrixXd outer = range_basis(selected_real_view(m, against.column_indices(n)), tol);
  if (outer.cols() == 0) return inner;

  // Singular values of outer^T inner are the cosines of the principal
  // angles; both bases are orthonormal so the threshold is absolute.
  const Eigen::MatrixXd overlap = outer.transpose() * inner;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(overlap, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  Eigen::Index touching = 0;
  while (touching < s.size() && s(touching) > tol) ++touching;
  return inner * svd.matrixV().rightCols(inner.cols() - touching);
}

int complement_dim(const SideMatrix& m, int inside, const ColumnSelector& against, double tol) {
  return static_cast<int>(complement_basis(m, inside, against, tol).cols());
}

}  // namespace luorbit
