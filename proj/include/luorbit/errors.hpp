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

#include <stdexcept>
#include <string>

namespace luorbit {

/// Base class for analysis failures. Precondition violations (bad qubit
/// positions, size mismatches, malformed pairings) throw std::invalid_argument
/// or std::out_of_range instead.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ZeroVectorError : public Error {
 public:
  ZeroVectorError() : Error("state vector is zero") {}
};

/// Minimality holds but the detected singlet pairs overlap or fail to cover
/// the qubits. Only reachable through a tolerance failure.
class InconsistentStructureError : public Error {
 public:
  using Error::Error;
};

class NotMinimalError : public Error {
 public:
  using Error::Error;
};

/// Contracting a detected pair against the canonical pair state either
/// annihilated the state or did not reproduce it.
class NonCanonicalFactorError : public Error {
 public:
  using Error::Error;
};

class ZeroResidualError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace luorbit
