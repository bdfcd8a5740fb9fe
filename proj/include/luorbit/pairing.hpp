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

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace luorbit {

/// Unordered pair of 1-based qubit positions, stored with first < second.
struct QubitPair {
  int first;
  int second;

  QubitPair(int a, int b);

  auto operator<=>(const QubitPair&) const = default;
};

/// Disjoint qubit pairs plus an optional lone qubit. For minimum-orbit
/// states this is the complete local-unitary invariant.
struct SingletPairing {
  std::vector<QubitPair> pairs;  // sorted
  std::optional<int> lone;

  SingletPairing() = default;
  SingletPairing(std::vector<QubitPair> p, std::optional<int> l);

  /// Throws std::invalid_argument unless the pairs are disjoint, cover
  /// {1..n} together with lone, and lone is present iff n is odd.
  void validate(int n) const;

  std::string to_string() const;

  friend bool operator==(const SingletPairing&, const SingletPairing&) = default;
};

/// Parses "1:2,3:4" into pairs.
std::vector<QubitPair> parse_pairs(const std::string& text);

}  // namespace luorbit
