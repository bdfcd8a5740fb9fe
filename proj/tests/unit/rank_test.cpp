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

#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "luorbit/generators.hpp"
#include "luorbit/lu_group.hpp"
#include "luorbit/rank.hpp"
#include "oracles.hpp"

namespace luorbit {
namespace {

StateVector pair_state() { return singlet_product(2, {{1, 2}}, std::nullopt); }

TEST(FloatRank, CountsStrictlyAboveThreshold) {
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(3, 3);
  d(0, 0) = 1.0;
  d(1, 1) = 1e-10;  // exactly at tol * sigma_max: discarded
  d(2, 2) = 0.0;
  auto r = float_rank(d, 1e-10);
  EXPECT_EQ(r.rank, 1);
  EXPECT_NEAR(r.gap_ratio, 1e10, 1e-2);
  ASSERT_EQ(r.singular_values.size(), 3u);
  EXPECT_GE(r.singular_values[0], r.singular_values[1]);
  EXPECT_GE(r.singular_values[1], r.singular_values[2]);

  auto full = float_rank(Eigen::MatrixXd::Identity(4, 4));
  EXPECT_EQ(full.rank, 4);
  EXPECT_TRUE(std::isinf(full.gap_ratio));
  EXPECT_FALSE(full.low_confidence());

  d(1, 1) = 1e-8;
  d(2, 2) = 5e-11;
  auto weak = float_rank(d, 1e-10);
  EXPECT_EQ(weak.rank, 2);
  EXPECT_TRUE(weak.low_confidence());
}

TEST(FloatRank, ZeroMatrix) {
  auto r = float_rank(Eigen::MatrixXd::Zero(4, 2));
  EXPECT_EQ(r.rank, 0);
}

// Bareiss against plain rational Gaussian elimination on matrices with a
// planted rank deficiency.
TEST(ExactRank, AgreesWithRationalEliminationOracle) {
  Rng rng(123);
  for (int trial = 0; trial < 60; ++trial) {
    const int rows = 2 + trial % 5, cols = 1 + trial % 7, planted = 1 + trial % 4;
    std::vector<std::vector<mpq_class>> basis(planted, std::vector<mpq_class>(rows));
    for (auto& v : basis) {
      for (auto& x : v) x = mpq_class(rng.uniform_int(-4, 4), rng.uniform_int(1, 5));
    }
    std::vector<std::vector<mpq_class>> vectors(cols, std::vector<mpq_class>(rows, 0));
    for (auto& v : vectors) {
      for (const auto& b : basis) {
        mpq_class coeff(rng.uniform_int(-3, 3), rng.uniform_int(1, 3));
        for (int i = 0; i < rows; ++i) v[i] += coeff * b[i];
      }
    }
    EXPECT_EQ(exact_rank(vectors), oracle::rational_rank(vectors)) << trial;
  }
}

TEST(ExactRank, EdgeCases) {
  EXPECT_EQ(exact_rank({}), 0);
  EXPECT_EQ(exact_rank({{0, 0}, {0, 0}}), 0);
  EXPECT_EQ(exact_rank({{mpq_class(1, 3), mpq_class(2, 7)}, {mpq_class(2, 3), mpq_class(4, 7)}}), 1);
  EXPECT_THROW(exact_rank({{1, 2}, {1}}), std::invalid_argument);
}

TEST(RealRank, SpecExamples) {
  SideMatrix zero(basis_state(1, MultiIndex(1, 0)));
  EXPECT_EQ(real_rank(zero, ColumnSelector::all(1)).rank, 3);
  SideMatrix pair(pair_state());
  EXPECT_EQ(real_rank(pair, ColumnSelector::all(2)).rank, 4);
}

// Generic two-qubit states stop at rank 6: in Schmidt form A_1 and A_2 act
// identically, so su(2)^2 has a one-dimensional stabilizer.
TEST(RealRank, GenericTwoQubitStateHasRankSix) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    SideMatrix m(random_state(2, seed));
    auto r = real_rank(m, ColumnSelector::all(2));
    EXPECT_EQ(r.rank, 6) << seed;
    EXPECT_EQ(r.rank, oracle::gauss_rank(real_view(m.columns()), 1e-9));
  }
}

TEST(RealRank, Errors) {
  SideMatrix m(random_state(2, 1));
  EXPECT_THROW(real_rank(m, ColumnSelector({}, false)), std::invalid_argument);
  EXPECT_THROW(real_rank(m, ColumnSelector({3}, false)), std::out_of_range);
  EXPECT_THROW(real_rank(m, ColumnSelector::all(2), {kDefaultTolerance, Backend::Exact}), std::logic_error);
}

TEST(ColumnSelector, Indices) {
  ColumnSelector s({3, 1, 3}, true);
  EXPECT_EQ(s.triples(), (std::vector<int>{1, 3}));
  EXPECT_TRUE(s.contains_triple(3));
  EXPECT_FALSE(s.contains_triple(2));
  EXPECT_EQ(s.column_indices(3), (std::vector<int>{0, 1, 2, 6, 7, 8, 9}));
  EXPECT_EQ(ColumnSelector::last_only().column_indices(2), (std::vector<int>{6}));
}

TEST(Backend, Parsing) {
  EXPECT_EQ(parse_backend("exact"), Backend::Exact);
  EXPECT_EQ(to_string(Backend::Float), "float");
  EXPECT_THROW(parse_backend("fast"), std::invalid_argument);
}

TEST(SpanDim, SpecExamples) {
  const std::vector<int> both = {1, 2};
  EXPECT_EQ(span_dim(SideMatrix(pair_state()), both, false), 3);
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    SideMatrix m(random_state(2, seed));
    EXPECT_EQ(span_dim(m, both, false), 5) << seed;
  }
  for (int n = 1; n <= 4; ++n) {
    SideMatrix m(random_state(n, 9 * n));
    for (int k = 1; k <= n; ++k) {
      const std::vector<int> one = {k};
      EXPECT_EQ(span_dim(m, one, false), 3);
    }
  }
}

TEST(SpanDim, TrichotomyMonotoneSubadditive) {
  Rng rng(31);
  for (int trial = 0; trial < 80; ++trial) {
    const int n = 2 + trial % 3;
    SideMatrix m(sample_mixed(n, trial, rng));
    for (int l = 1; l <= n; ++l) {
      for (int lp = l + 1; lp <= n; ++lp) {
        const std::vector<int> pair = {l, lp}, a = {l}, b = {lp};
        const int d = span_dim(m, pair, false);
        EXPECT_TRUE(d == 3 || d == 5 || d == 6) << d;
        EXPECT_GE(d, span_dim(m, a, false));
        EXPECT_LE(d, span_dim(m, a, false) + span_dim(m, b, false));
        EXPECT_LE(d, span_dim(m, pair, true));
      }
    }
  }
}

TEST(SpanDim, SubsetLowerBound) {
  Rng rng(8);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + trial % 4;
    SideMatrix m(sample_mixed(n, trial, rng));
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
      std::vector<int> triples;
      for (int k = 1; k <= n; ++k) {
        if (mask & (1u << (k - 1))) triples.push_back(k);
      }
      const int q = static_cast<int>(triples.size());
      const int bound = (q % 2 == 0 ? 3 * q / 2 : (3 * q + 1) / 2) + 1;
      EXPECT_GE(span_dim(m, triples, true), bound);
    }
  }
}

TEST(SpanDim, InvariantUnderPhaseAndScale) {
  auto psi = random_state(3, 4);
  std::vector<Complex> scaled(psi.amplitudes().begin(), psi.amplitudes().end());
  for (auto& z : scaled) z *= std::polar(3.5, 1.1);
  SideMatrix a(psi), b(StateVector::from_amplitudes(scaled));
  EXPECT_EQ(real_rank(a, ColumnSelector::all(3)).rank, real_rank(b, ColumnSelector::all(3)).rank);

  Rng rng(2);
  auto exact = random_rational_state(2, rng);
  std::vector<GaussianRational> times(exact.exact_amplitudes().begin(), exact.exact_amplitudes().end());
  for (auto& z : times) z = z * GaussianRational(mpq_class(2, 3), mpq_class(5));
  const RankOptions ex{kDefaultTolerance, Backend::Exact};
  EXPECT_EQ(real_rank(SideMatrix(exact), ColumnSelector::all(2), ex).rank,
            real_rank(SideMatrix(StateVector::from_exact(times)), ColumnSelector::all(2), ex).rank);
}

TEST(Backends, AgreeOnRationalStates) {
  Rng rng(99);
  const RankOptions ex{kDefaultTolerance, Backend::Exact};
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 1 + trial % 4;
    SideMatrix m(random_rational_state(n, rng));
    EXPECT_EQ(real_rank(m, ColumnSelector::all(n)).rank, real_rank(m, ColumnSelector::all(n), ex).rank);
    for (int l = 1; l <= n; ++l) {
      for (int lp = l + 1; lp <= n; ++lp) {
        const std::vector<int> pair = {l, lp};
        EXPECT_EQ(span_dim(m, pair, false), span_dim(m, pair, false, ex));
      }
    }
  }
}

// dim of <T_inside> perpendicular to the `against` columns, by projecting a
// Gram-Schmidt basis of T_inside onto those columns and taking a nullspace.
int complement_oracle(const SideMatrix& m, int inside, const std::vector<int>& against_cols) {
  Eigen::MatrixXd t = real_view(m.columns()).middleCols(3 * (inside - 1), 3);
  for (int j = 0; j < 3; ++j) {
    for (int i = 0; i < j; ++i) t.col(j) -= t.col(i).dot(t.col(j)) * t.col(i);
    t.col(j).normalize();
  }
  Eigen::MatrixXd a(t.rows(), static_cast<Eigen::Index>(against_cols.size()));
  RealView full = real_view(m.columns());
  for (std::size_t c = 0; c < against_cols.size(); ++c) a.col(static_cast<Eigen::Index>(c)) = full.col(against_cols[c]);
  return 3 - oracle::gauss_rank(a.transpose() * t, 1e-9);
}

TEST(ComplementDim, SpecExamples) {
  SideMatrix pair(pair_state());
  // T_1 and T_2 span the same three directions for the pair state, so
  // nothing of T_1 is left once T_2 is removed.
  EXPECT_EQ(complement_dim(pair, 1, ColumnSelector({2}, false)), 0);
  EXPECT_EQ(complement_dim(pair, 1, ColumnSelector({2}, false)), complement_oracle(pair, 1, {3, 4, 5}));

  const int last_only = complement_dim(pair, 1, ColumnSelector::last_only());
  EXPECT_EQ(last_only, complement_oracle(pair, 1, {6}));
  // Every generator column of a minimum-orbit pair is orthogonal to -i psi.
  EXPECT_EQ(last_only, 3);

  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    SideMatrix m(random_state(2, seed));
    EXPECT_EQ(complement_dim(m, 1, ColumnSelector({2}, true)), 0);
    EXPECT_EQ(complement_oracle(m, 1, {3, 4, 5, 6}), 0);
  }
}

TEST(ComplementDim, MatchesOracleOnMixedInstances) {
  Rng rng(64);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + trial % 3;
    SideMatrix m(sample_mixed(n, trial, rng));
    ColumnSelector others = [&] {
      std::vector<int> t;
      for (int k = 2; k <= n; ++k) t.push_back(k);
      return ColumnSelector(t, true);
    }();
    auto cols = others.column_indices(n);
    EXPECT_EQ(complement_dim(m, 1, others), complement_oracle(m, 1, cols)) << trial;
    auto basis = complement_basis(m, 1, others);
    EXPECT_EQ(basis.cols(), complement_dim(m, 1, others));
    if (basis.cols() > 0) {
      EXPECT_LT((basis.transpose() * basis - Eigen::MatrixXd::Identity(basis.cols(), basis.cols())).norm(), 1e-10);
    }
  }
}

TEST(ComplementDim, RejectsInsideInAgainst) {
  SideMatrix m(random_state(2, 1));
  EXPECT_THROW(complement_dim(m, 1, ColumnSelector({1, 2}, false)), std::invalid_argument);
}

}  // namespace
}  // namespace luorbit
