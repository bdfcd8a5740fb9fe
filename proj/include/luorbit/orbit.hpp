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

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "luorbit/pairing.hpp"
#include "luorbit/rank.hpp"
#include "luorbit/state.hpp"

namespace luorbit {

/// Smallest LU orbit dimension on n qubits: 3n/2 (n even), (3n+1)/2 (n odd).
int min_orbit_dimension(int n);

/// rank_R M - 1.
int orbit_dimension(const StateVector& psi, const RankOptions& options = {});
int orbit_dimension(const SideMatrix& m, const RankOptions& options = {});

struct Diagnostics {
  Backend backend = Backend::Float;
  double tol = kDefaultTolerance;
  double rank_gap_ratio = std::numeric_limits<double>::infinity();
  double min_pair_gap_ratio = std::numeric_limits<double>::infinity();
  double min_lone_gap_ratio = std::numeric_limits<double>::infinity();
  std::vector<double> singular_values;
  std::vector<std::string> warnings;
};

struct MinimalityVerdict {
  bool minimal = false;
  int orbit_dimension = 0;
  int min_orbit_dimension = 0;
  RankResult rank;
};

MinimalityVerdict is_minimum_orbit(const StateVector& psi, const RankOptions& options = {});
MinimalityVerdict is_minimum_orbit(const SideMatrix& m, const RankOptions& options = {});

/// Pairs (l, l') whose triples together span exactly three dimensions; each
/// carries a singlet factor up to local unitaries.
std::vector<QubitPair> detect_singlet_pairs(const StateVector& psi, const RankOptions& options = {});
std::vector<QubitPair> detect_singlet_pairs(const SideMatrix& m, const RankOptions& options = {});

/// Qubits j with dim <T_j, -i psi> = 3, i.e. unentangled qubits.
std::vector<int> detect_unentangled(const StateVector& psi, const RankOptions& options = {});
std::vector<int> detect_unentangled(const SideMatrix& m, const RankOptions& options = {});

struct NotMinimal {
  int orbit_dimension = 0;
  int min_orbit_dimension = 0;
};

struct Classification {
  std::variant<SingletPairing, NotMinimal> result;
  Diagnostics diagnostics;

  bool minimal() const { return std::holds_alternative<SingletPairing>(result); }
  const SingletPairing& pairing() const { return std::get<SingletPairing>(result); }
};

/// Singlet pairing of a minimum-orbit state, or NotMinimal. Throws
/// InconsistentStructureError if minimality holds but the detected pairs
/// overlap or do not cover the qubits.
Classification classify_min_orbit(const StateVector& psi, const RankOptions& options = {});

struct Factor {
  std::vector<int> qubits;  // 1-based positions in the input state
  StateVector state;
};

/// Splits a minimum-orbit state in canonical product form into pair factors
/// (|00>+|11>)/sqrt2 and, for odd n, the lone one-qubit residual. Throws
/// NotMinimalError, or NonCanonicalFactorError when a detected pair is only
/// LU-equivalent to the canonical pair state.
std::vector<Factor> factor_state(const StateVector& psi, const RankOptions& options = {});

/// Tensor product of factors placed at their recorded qubit positions.
StateVector assemble_factors(int n, const std::vector<Factor>& factors);

/// Pair sets equal as sets of unordered pairs. Throws std::invalid_argument
/// if the two pairings describe different qubit counts.
bool pairing_equal(const SingletPairing& p, const SingletPairing& q);

struct OrbitReport {
  int n = 0;
  int rank = 0;
  int orbit_dimension = 0;
  int min_orbit_dimension = 0;
  bool is_minimal = false;
  std::vector<std::vector<int>> pair_span;  // diagonal holds dim <T_l> = 3
  std::vector<int> lone_span;
  std::optional<SingletPairing> pairing;
  Diagnostics diagnostics;
};

/// Full report. Never throws InconsistentStructureError; a structure failure
/// leaves `pairing` empty and is recorded in diagnostics.warnings.
OrbitReport analyze(const StateVector& psi, const RankOptions& options = {});

}  // namespace luorbit
