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

#include "luorbit/pairing.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace luorbit {

QubitPair::QubitPair(int a, int b) : first(std::min(a, b)), second(std::max(a, b)) {
  if (a == b) throw std::invalid_argument("a pair needs two distinct qubits");
  if (first < 1) throw std::out_of_range("qubit positions are 1-based");
}

SingletPairing::SingletPairing(std::vector<QubitPair> p, std::optional<int> l)
    : pairs(std::move(p)), lone(l) {
  std::sort(pairs.begin(), pairs.end());
}

void SingletPairing::validate(int n) const {
  std::vector<int> seen(static_cast<std::size_t>(n) + 1, 0);
  auto mark = [&](int q) {
    if (q < 1 || q > n) {
      throw std::invalid_argument("qubit " + std::to_string(q) + " outside 1.." + std::to_string(n));
    }
    if (seen[q]++) throw std::invalid_argument("qubit " + std::to_string(q) + " used twice");
  };
  for (const auto& p : pairs) {
    mark(p.first);
    mark(p.second);
  }
  if (lone.has_value() != (n % 2 == 1)) {
    throw std::invalid_argument(n % 2 ? "odd qubit count requires a lone qubit"
                                      : "even qubit count cannot have a lone qubit");
  }
  if (lone) mark(*lone);
  for (int q = 1; q <= n; ++q) {
    if (!seen[q]) throw std::invalid_argument("qubit " + std::to_string(q) + " not covered by the pairing");
  }
}

std::string SingletPairing::to_string() const {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (i) out << ',';
    out << '(' << pairs[i].first << ',' << pairs[i].second << ')';
  }
  out << '}';
  if (lone) out << " lone=" << *lone;
  return out.str();
}

std::vector<QubitPair> parse_pairs(const std::string& text) {
  std::vector<QubitPair> pairs;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("pair '" + item + "' is not of the form l:l'");
    std::size_t used_a = 0, used_b = 0;
    int a = 0, b = 0;
    try {
      a = std::stoi(item.substr(0, colon), &used_a);
      b = std::stoi(item.substr(colon + 1), &used_b);
    } catch (const std::exception&) {
      throw std::invalid_argument("pair '" + item + "' is not of the form l:l'");
    }
    if (used_a != colon || used_b != item.size() - colon - 1) {
      throw std::invalid_argument("pair '" + item + "' is not of the form l:l'");
    }
    pairs.emplace_back(a, b);
  }
  if (pairs.empty()) throw std::invalid_argument("empty pair list");
  return pairs;
}

}  // namespace luorbit
