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

// State files:
//   {"n": 2, "mode": "float", "amplitudes": [[re, im], ...]}
//   {"n": 2, "mode": "exact", "amplitudes": [["1", "0"], ["-1/2", "3"], ...]}
// amplitudes are ordered by integer code (qubit 1 most significant).

#pragma once

#include "json.hpp"

#include <string>
#include <string_view>

#include "luorbit/lie_action.hpp"
#include "luorbit/orbit.hpp"
#include "luorbit/state.hpp"
#include "luorbit/verify.hpp"

namespace luorbit {

using Json = nlohmann::ordered_json;

/// Exact states are written with their representative, float states with
/// their unit-norm amplitudes.
Json state_to_json(const StateVector& psi);

/// Throws ParseError for schema violations and ZeroVectorError for an
/// all-zero amplitude list.
StateVector state_from_json(const Json& doc);
StateVector parse_state(std::string_view text);

Json pairing_to_json(const SingletPairing& pairing);
Json diagnostics_to_json(const Diagnostics& diagnostics);
Json report_to_json(const OrbitReport& report);
Json side_matrix_to_json(const SideMatrix& m);
Json classification_to_json(const Classification& classification);
Json suite_report_to_json(const SuiteReport& report);

/// Serializes with doubles at 17 significant digits. Non-finite doubles are
/// written as null. A negative indent gives single-line compact output.
std::string dump_json(const Json& doc, int indent = 2);

}  // namespace luorbit
