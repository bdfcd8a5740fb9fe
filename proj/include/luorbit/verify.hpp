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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "luorbit/state.hpp"

namespace luorbit {

struct Counterexample {
  int trial = 0;
  std::string detail;
  /// Absent when the trial failed before an instance was built.
  std::optional<StateVector> state;
};

struct SuiteReport {
  std::string name;
  int n = 0;
  int trials = 0;
  /// Instances on which the property's hypothesis held and it was checked.
  int checked = 0;
  /// Set when n is too small for the suite; a skipped suite is not a pass.
  std::optional<std::string> skipped;
  std::vector<Counterexample> counterexamples;

  bool passed() const { return !skipped && checked > 0 && counterexamples.empty(); }
};

/// Registered suite names, in a fixed order.
const std::vector<std::string>& suite_names();

/// Runs the named property on `trials` generated instances. Trial t draws
/// from Rng(seed).split(t), so reports are reproducible and independent of
/// evaluation order. Throws std::invalid_argument for an unknown suite.
SuiteReport verify_proposition(std::string_view name, int n, int trials, std::uint64_t seed);

}  // namespace luorbit
