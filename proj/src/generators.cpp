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

#include "luorbit/generators.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "luorbit/lu_group.hpp"

namespace luorbit {

SingletPairing random_pairing(int n, Rng& rng) {
  check_qubit_count(n);
  const auto order = random_permutation(n, rng);
  std::vector<QubitPair> pairs;
  for (int i = 0; i + 1 < n; i += 2) pairs.emplace_back(order[i], order[i + 1]);
  std::optional<int> lone;
  if (n % 2) lone = order.back();
  return SingletPairing(std::move(pairs), lone);
}

std::vector<int> random_permutation(int n, Rng& rng) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  std::shuffle(p.begin(), p.end(), rng.engine());
  return p;
}

std::vector<int> random_subset(int n, int size, Rng& rng) {
  if (size < 0 || size > n) throw std::invalid_argument("random_subset: size out of range");
  auto p = random_permutation(n, rng);
  p.resize(static_cast<std::size_t>(size));
  std::sort(p.begin(), p.end());
  return p;
}

StateVector embed_blocks(const std::vector<StateVector>& blocks, const std::vector<std::vector<int>>& positions) {
  if (blocks.empty() || blocks.size() != positions.size()) {
    throw std::invalid_argument("embed_blocks: one position group per block required");
  }
  std::optional<StateVector> product;
  std::vector<int> target;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (static_cast<int>(positions[i].size()) != blocks[i].qubits()) {
      throw std::invalid_argument("embed_blocks: position group size mismatch");
    }
    product = product ? tensor(*product, blocks[i]) : blocks[i];
    target.insert(target.end(), positions[i].begin(), positions[i].end());
  }
  return permute_qubits(*product, target);
}

std::string to_string(Family family) {
  switch (family) {
    case Family::Haar: return "haar";
    case Family::SingletProduct: return "singlet-product";
    case Family::FullProduct: return "full-product";
    case Family::SingletTimesRest: return "singlet-times-rest";
    case Family::GenericPairTimesRest: return "generic-pair-times-rest";
    case Family::Ghz: return "ghz";
    case Family::W: return "w";
    case Family::Blocks: return "blocks";
  }
  return "unknown";
}

namespace {

StateVector scramble(const StateVector& psi, Rng& rng) {
  return apply_local(psi, LocalUnitary::random(psi.qubits(), rng.next()));
}

/// A two-qubit block on a random pair, a random state on the rest.
StateVector pair_times_rest(const StateVector& pair, int n, Rng& rng) {
  const auto order = random_permutation(n, rng);
  std::vector<StateVector> blocks{pair};
  std::vector<std::vector<int>> positions{{order[0], order[1]}};
  if (n > 2) {
    blocks.push_back(random_state(n - 2, rng.next()));
    positions.emplace_back(order.begin() + 2, order.end());
  }
  return embed_blocks(blocks, positions);
}

}  // namespace

StateVector sample_family(Family family, int n, Rng& rng) {
  check_qubit_count(n);
  if (n == 1 && (family == Family::SingletTimesRest || family == Family::GenericPairTimesRest)) {
    family = Family::Haar;
  }
  switch (family) {
    case Family::Haar:
      return random_state(n, rng.next());
    case Family::SingletProduct:
      return scramble(singlet_product(n, random_pairing(n, rng)), rng);
    case Family::FullProduct: {
      StateVector psi = random_state(1, rng.next());
      for (int k = 2; k <= n; ++k) psi = tensor(psi, random_state(1, rng.next()));
      return psi;
    }
    case Family::SingletTimesRest:
      return scramble(pair_times_rest(singlet_product(2, {QubitPair(1, 2)}, std::nullopt), n, rng), rng);
    case Family::GenericPairTimesRest:
      return pair_times_rest(random_state(2, rng.next()), n, rng);
    case Family::Ghz:
      return scramble(ghz_state(n), rng);
    case Family::W:
      return scramble(w_state(n), rng);
    case Family::Blocks: {
      const auto order = random_permutation(n, rng);
      std::vector<StateVector> blocks;
      std::vector<std::vector<int>> positions;
      int used = 0;
      while (used < n) {
        const int size = std::min(rng.uniform_int(1, 3), n - used);
        blocks.push_back(random_state(size, rng.next()));
        positions.emplace_back(order.begin() + used, order.begin() + used + size);
        used += size;
      }
      return embed_blocks(blocks, positions);
    }
  }
  throw std::invalid_argument("unknown family");
}

StateVector random_rational_state(int n, Rng& rng, int range) {
  check_qubit_count(n);
  std::vector<GaussianRational> amps(Code{1} << n);
  bool nonzero = false;
  while (!nonzero) {
    for (auto& a : amps) {
      a = GaussianRational(mpq_class(rng.uniform_int(-range, range)), mpq_class(rng.uniform_int(-range, range)));
      nonzero = nonzero || !a.is_zero();
    }
  }
  return StateVector::from_exact(std::move(amps));
}

StateVector sample_mixed(int n, int trial, Rng& rng) {
  return sample_family(static_cast<Family>(trial % kFamilyCount), n, rng);
}

}  // namespace luorbit
