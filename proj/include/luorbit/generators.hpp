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

// Random instance families used by the property suites.

#pragma once

#include <string>
#include <vector>

#include "luorbit/pairing.hpp"
#include "luorbit/random.hpp"
#include "luorbit/state.hpp"

namespace luorbit {

/// Uniformly random perfect pairing of {1..n} (plus a lone qubit if n odd).
SingletPairing random_pairing(int n, Rng& rng);

/// Uniformly random permutation of 1..n (as a target-position table).
std::vector<int> random_permutation(int n, Rng& rng);

/// Random subset of {1..n} of the given size, sorted.
std::vector<int> random_subset(int n, int size, Rng& rng);

/// Places `blocks` (in order) onto the given disjoint position groups. The
/// concatenation of the groups must be a permutation of 1..n.
StateVector embed_blocks(const std::vector<StateVector>& blocks, const std::vector<std::vector<int>>& positions);

enum class Family {
  Haar,              // generic random state
  SingletProduct,    // random pairing, scrambled by a random local unitary
  FullProduct,       // tensor product of random one-qubit states
  SingletTimesRest,  // pair state on a random pair, random state elsewhere
  GenericPairTimesRest,  // random two-qubit state on a random pair, random rest
  Ghz,               // scrambled GHZ
  W,                 // scrambled W
  Blocks,            // random partition into blocks of size <= 3, each random
};

inline constexpr int kFamilyCount = 8;

std::string to_string(Family family);

/// One instance from the family. Families that need two qubits fall back to
/// Haar when n = 1.
StateVector sample_family(Family family, int n, Rng& rng);

/// Exact-mode state with small random Gaussian-integer amplitudes in
/// [-range, range] + i[-range, range]; never zero.
StateVector random_rational_state(int n, Rng& rng, int range = 3);

/// Cycles through all families by trial index.
StateVector sample_mixed(int n, int trial, Rng& rng);

}  // namespace luorbit
