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

#include <limits>
#include <span>
#include <string_view>
#include <vector>

#include "luorbit/lie_action.hpp"

namespace luorbit {

enum class Backend { Float, Exact };

std::string_view to_string(Backend backend);
Backend parse_backend(std::string_view text);

inline constexpr double kDefaultTolerance = 1e-10;
/// gap_ratio below this marks a floating verdict as low confidence.
inline constexpr double kLowConfidenceGap = 1e3;

struct RankOptions {
  double tol = kDefaultTolerance;
  Backend backend = Backend::Float;
};

struct RankResult {
  int rank = 0;
  /// Descending; empty for the exact backend.
  std::vector<double> singular_values;
  /// Smallest retained over largest discarded singular value. Infinite when
  /// nothing (or only exact zeros) was discarded, and for the exact backend.
  double gap_ratio = std::numeric_limits<double>::infinity();
  Backend backend = Backend::Float;

  bool low_confidence() const { return gap_ratio < kLowConfidenceGap; }
};

/// A set of triples T_k (1-based) plus optionally the rightmost column -i psi.
class ColumnSelector {
 public:
  ColumnSelector() = default;
  ColumnSelector(std::vector<int> triples, bool include_last);

  static ColumnSelector all(int n);
  static ColumnSelector last_only() { return ColumnSelector({}, true); }

  const std::vector<int>& triples() const { return triples_; }
  bool include_last() const { return include_last_; }
  bool empty() const { return triples_.empty() && !include_last_; }
  bool contains_triple(int k) const;

  /// Column indices into M. Throws std::out_of_range if a triple exceeds n.
  std::vector<int> column_indices(int n) const;

 private:
  std::vector<int> triples_;  // sorted, unique
  bool include_last_ = false;
};

/// Floating rank: counts sigma_i > tol * sigma_max (ties discarded).
RankResult float_rank(const Eigen::MatrixXd& matrix, double tol = kDefaultTolerance);

/// Exact rank of a set of rational vectors by fraction-free (Bareiss)
/// elimination after clearing denominators vector by vector.
int exact_rank(const std::vector<std::vector<mpq_class>>& vectors);

/// Real rank of the selected columns of M. Throws std::invalid_argument for an
/// empty selection, std::logic_error for the exact backend on a float state.
RankResult real_rank(const SideMatrix& m, const ColumnSelector& selection, const RankOptions& options = {});

/// dim of the real span of the selected triples (and -i psi if requested).
int span_dim(const SideMatrix& m, std::span<const int> triples, bool include_last,
             const RankOptions& options = {});
RankResult span_rank(const SideMatrix& m, std::span<const int> triples, bool include_last,
                     const RankOptions& options = {});

/// Orthonormal basis (as real columns) of the part of <T_inside> orthogonal
/// to every selected column of `against`.
Eigen::MatrixXd complement_basis(const SideMatrix& m, int inside, const ColumnSelector& against,
                                 double tol = kDefaultTolerance);

/// dim <T_inside> minus the rank of the projection of its orthonormal basis
/// onto span(against). `inside` must not be part of `against`.
int complement_dim(const SideMatrix& m, int inside, const ColumnSelector& against,
                   double tol = kDefaultTolerance);

}  // namespace luorbit
