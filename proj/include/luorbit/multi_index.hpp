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
#include <string>
#include <string_view>

namespace luorbit {

using Code = std::uint64_t;

/// Largest supported register. 2^24 amplitudes is already far beyond what a
/// dense side matrix can be ranked on.
inline constexpr int kMaxQubits = 24;

/// Bit mask of qubit k (1-based) in an n-qubit code. Qubit 1 is the most
/// significant bit, so |i_1 ... i_n> has code sum_k i_k 2^(n-k).
constexpr Code qubit_mask(int n, int k) { return Code{1} << (n - k); }

constexpr int bit_of(Code code, int n, int k) { return (code & qubit_mask(n, k)) ? 1 : 0; }

void check_qubit_count(int n);
void check_position(int n, int k);

/// Multi-index I = (i_1 ... i_n), stored as its integer code.
class MultiIndex {
 public:
  MultiIndex(int n, Code code);

  /// Parses a bit string such as "0101" (i_1 first).
  static MultiIndex from_bits(std::string_view bits);

  int qubits() const { return n_; }
  Code code() const { return code_; }
  int bit(int k) const;
  std::string bits() const;

  /// I_k: complement of bit k.
  MultiIndex flipped(int k) const;
  /// I_kl: complement of bits k and l.
  MultiIndex flipped(int k, int l) const;

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;

 private:
  int n_;
  Code code_;
};

inline MultiIndex flip_bit(const MultiIndex& index, int k) { return index.flipped(k); }

}  // namespace luorbit
