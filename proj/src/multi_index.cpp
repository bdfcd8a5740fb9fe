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

#include "luorbit/multi_index.hpp"

#include <stdexcept>
#include <string>

namespace luorbit {

void check_qubit_count(int n) {
  if (n < 1 || n > kMaxQubits) {
    throw std::out_of_range("qubit count " + std::to_string(n) + " outside [1, " +
                            std::to_string(kMaxQubits) + "]");
  }
}

void check_position(int n, int k) {
  if (k < 1 || k > n) {
    throw std::out_of_range("qubit position " + std::to_string(k) + " outside [1, " + std::to_string(n) + "]");
  }
}

MultiIndex::MultiIndex(int n, Code code) : n_(n), code_(code) {
  check_qubit_count(n);
  if (code >= (Code{1} << n)) {
    throw std::out_of_range("index " + std::to_string(code) + " out of range for " + std::to_string(n) +
                            " qubits");
  }
}

MultiIndex MultiIndex::from_bits(std::string_view bits) {
  Code code = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') throw std::invalid_argument("multi-index digits must be 0 or 1");
    code = (code << 1) | static_cast<Code>(c - '0');
  }
  return MultiIndex(static_cast<int>(bits.size()), code);
}

int MultiIndex::bit(int k) const {
  check_position(n_, k);
  return bit_of(code_, n_, k);
}

std::string MultiIndex::bits() const {
  std::string s;
  for (int k = 1; k <= n_; ++k) s.push_back(bit_of(code_, n_, k) ? '1' : '0');
  return s;
}

MultiIndex MultiIndex::flipped(int k) const {
  check_position(n_, k);
  return MultiIndex(n_, code_ ^ qubit_mask(n_, k));
}

MultiIndex MultiIndex::flipped(int k, int l) const { return flipped(k).flipped(l); }

}  // namespace luorbit
