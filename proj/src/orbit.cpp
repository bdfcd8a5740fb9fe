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

#include "luorbit/orbit.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "luorbit/errors.hpp"

namespace luorbit {
namespace {

struct SpanTables {
  std::vector<std::vector<int>> pair;
  double pair_gap = std::numeric_limits<double>::infinity();
  std::vector<int> lone;
  double lone_gap = std::numeric_limits<double>::infinity();
};

std::vector<std::vector<int>> pair_table(const SideMatrix& m, const RankOptions& options, double* gap) {
  const int n = m.qubits();
  std::vector<std::vector<int>> table(n, std::vector<int>(n, 0));
  for (int l = 1; l <= n; ++l) {
    table[l - 1][l - 1] = 3;
    for (int lp = l + 1; lp <= n; ++lp) {
      const int pair[] = {l, lp};
      const RankResult r = span_rank(m, pair, false, options);
      table[l - 1][lp - 1] = table[lp - 1][l - 1] = r.rank;
      if (gap) *gap = std::min(*gap, r.gap_ratio);
    }
  }
  return table;
}

std::vector<int> lone_table(const SideMatrix& m, const RankOptions& options, double* gap) {
  const int n = m.qubits();
  std::vector<int> out(n);
  for (int j = 1; j <= n; ++j) {
    const int triple[] = {j};
    const RankResult r = span_rank(m, triple, true, options);
    out[j - 1] = r.rank;
    if (gap) *gap = std::min(*gap, r.gap_ratio);
  }
  return out;
}

SpanTables span_tables(const SideMatrix& m, const RankOptions& options) {
  SpanTables t;
  t.pair = pair_table(m, options, &t.pair_gap);
  t.lone = lone_table(m, options, &t.lone_gap);
  return t;
}

std::vector<QubitPair> pairs_from_table(const std::vector<std::vector<int>>& table) {
  std::vector<QubitPair> pairs;
  const int n = static_cast<int>(table.size());
  for (int l = 1; l <= n; ++l) {
    for (int lp = l + 1; lp <= n; ++lp) {
      if (table[l - 1][lp - 1] == 3) pairs.emplace_back(l, lp);
    }
  }
  return pairs;
}

std::vector<int> unentangled_from_table(const std::vector<int>& lone) {
  std::vector<int> out;
  for (std::size_t j = 0; j < lone.size(); ++j) {
    if (lone[j] == 3) out.push_back(static_cast<int>(j) + 1);
  }
  return out;
}

std::string gap_text(double gap) {
  std::ostringstream s;
  s << gap;
  return s.str();
}

/// Fills the rank part of the diagnostics and returns the verdict.
MinimalityVerdict minimality(const SideMatrix& m, const RankOptions& options, Diagnostics& diag) {
  MinimalityVerdict v = is_minimum_orbit(m, options);
  diag.backend = options.backend;
  diag.tol = options.tol;
  diag.rank_gap_ratio = v.rank.gap_ratio;
  diag.singular_values = v.rank.singular_values;
  if (v.rank.low_confidence()) {
    diag.warnings.push_back("rank verdict has low confidence (gap ratio " + gap_text(v.rank.gap_ratio) + ")");
  }
  return v;
}

/// Turns the pair-span table of a minimal state into its pairing.
SingletPairing pairing_from_tables(int n, const SpanTables& tables, Diagnostics& diag) {
  diag.min_pair_gap_ratio = tables.pair_gap;
  diag.min_lone_gap_ratio = tables.lone_gap;
  if (tables.pair_gap < kLowConfidenceGap) {
    diag.warnings.push_back("pair-span verdicts have low confidence (gap ratio " + gap_text(tables.pair_gap) + ")");
  }
  const auto pairs = pairs_from_table(tables.pair);
  std::vector<int> used(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& p : pairs) {
    if (used[p.first]++ || used[p.second]++) {
      throw InconsistentStructureError("minimal state has overlapping singlet pairs " +
                                       SingletPairing(pairs, std::nullopt).to_string() +
                                       " (min pair gap ratio " + gap_text(tables.pair_gap) + ")");
    }
  }
  if (static_cast<int>(pairs.size()) != n / 2) {
    throw InconsistentStructureError("minimal state has " + std::to_string(pairs.size()) + " singlet pairs, expected " +
                                     std::to_string(n / 2) + " (min pair gap ratio " + gap_text(tables.pair_gap) +
                                     ")");
  }
  std::optional<int> lone;
  for (int q = 1; q <= n; ++q) {
    if (!used[q]) lone = q;
  }

  // Independent route: the lone qubit must be exactly the unentangled set.
  const auto unentangled = unentangled_from_table(tables.lone);
  const std::vector<int> expected = lone ? std::vector<int>{*lone} : std::vector<int>{};
  if (unentangled != expected) {
    std::ostringstream s;
    s << "unentangled-qubit detection disagrees with pair coverage: detected {";
    for (std::size_t i = 0; i < unentangled.size(); ++i) s << (i ? "," : "") << unentangled[i];
    s << "}, coverage leaves " << (lone ? std::to_string(*lone) : std::string("none"));
    diag.warnings.push_back(s.str());
  }
  return SingletPairing(pairs, lone);
}

/// Places a two-qubit factor at (l, l') and `rest` on the other qubits.
StateVector embed_pair(const StateVector& pair, int l, int l_prime, const StateVector& rest) {
  const int n = rest.qubits() + 2;
  std::vector<int> target;
  target.reserve(static_cast<std::size_t>(n));
  target.push_back(l);
  target.push_back(l_prime);
  for (int k = 1; k <= n; ++k) {
    if (k != l && k != l_prime) target.push_back(k);
  }
  return permute_qubits(tensor(pair, rest), target);
}

}  // namespace

int min_orbit_dimension(int n) {
  if (n < 1) throw std::invalid_argument("min_orbit_dimension: n must be at least 1");
  return n % 2 == 0 ? 3 * n / 2 : (3 * n + 1) / 2;
}

int orbit_dimension(const SideMatrix& m, const RankOptions& options) {
  return real_rank(m, ColumnSelector::all(m.qubits()), options).rank - 1;
}

int orbit_dimension(const StateVector& psi, const RankOptions& options) {
  return orbit_dimension(side_matrix(psi), options);
}

MinimalityVerdict is_minimum_orbit(const SideMatrix& m, const RankOptions& options) {
  MinimalityVerdict v;
  v.rank = real_rank(m, ColumnSelector::all(m.qubits()), options);
  v.orbit_dimension = v.rank.rank - 1;
  v.min_orbit_dimension = min_orbit_dimension(m.qubits());
  v.minimal = v.orbit_dimension == v.min_orbit_dimension;
  return v;
}

MinimalityVerdict is_minimum_orbit(const StateVector& psi, const RankOptions& options) {
  return is_minimum_orbit(side_matrix(psi), options);
}

std::vector<QubitPair> detect_singlet_pairs(const SideMatrix& m, const RankOptions& options) {
  return pairs_from_table(pair_table(m, options, nullptr));
}

std::vector<QubitPair> detect_singlet_pairs(const StateVector& psi, const RankOptions& options) {
  return detect_singlet_pairs(side_matrix(psi), options);
}

std::vector<int> detect_unentangled(const SideMatrix& m, const RankOptions& options) {
  return unentangled_from_table(lone_table(m, options, nullptr));
}

std::vector<int> detect_unentangled(const StateVector& psi, const RankOptions& options) {
  return detect_unentangled(side_matrix(psi), options);
}

Classification classify_min_orbit(const StateVector& psi, const RankOptions& options) {
  const SideMatrix m = side_matrix(psi);
  Classification out;
  const MinimalityVerdict v = minimality(m, options, out.diagnostics);
  if (!v.minimal) {
    out.result = NotMinimal{v.orbit_dimension, v.min_orbit_dimension};
    return out;
  }
  out.result = pairing_from_tables(psi.qubits(), span_tables(m, options), out.diagnostics);
  return out;
}

std::vector<Factor> factor_state(const StateVector& psi, const RankOptions& options) {
  const Classification c = classify_min_orbit(psi, options);
  if (!c.minimal()) {
    const auto& nm = std::get<NotMinimal>(c.result);
    throw NotMinimalError("state has orbit dimension " + std::to_string(nm.orbit_dimension) + ", minimum is " +
                          std::to_string(nm.min_orbit_dimension));
  }
  const StateVector pair_state = singlet_product(2, {QubitPair(1, 2)}, std::nullopt);
  std::vector<Factor> factors;
  std::vector<int> labels(static_cast<std::size_t>(psi.qubits()));
  for (int k = 1; k <= psi.qubits(); ++k) labels[k - 1] = k;
  StateVector residual = psi.as_float();

  while (residual.qubits() >= 2) {
    const auto pairs = detect_singlet_pairs(residual, options);
    if (pairs.empty()) {
      throw InconsistentStructureError("minimal residual on " + std::to_string(residual.qubits()) +
                                       " qubits has no singlet pair");
    }
    const int l = pairs.front().first;
    const int lp = pairs.front().second;
    const std::string where =
        "qubits " + std::to_string(labels[l - 1]) + "," + std::to_string(labels[lp - 1]);
    if (residual.qubits() == 2) {
      if (!equal_up_to_phase(residual, pair_state, options.tol)) {
        throw NonCanonicalFactorError(where + " carry a singlet that is not in canonical (|00>+|11>) form");
      }
      factors.push_back({{labels[l - 1], labels[lp - 1]}, pair_state.as_float()});
      labels.clear();
      break;
    }
    StateVector rest = [&] {
      try {
        return contract_pair(residual, l, lp, options.tol);
      } catch (const ZeroResidualError&) {
        throw NonCanonicalFactorError(where + ": contraction with (|00>+|11>) vanishes");
      }
    }();
    if (!equal_up_to_phase(embed_pair(pair_state, l, lp, rest), residual, options.tol)) {
      throw NonCanonicalFactorError(where + " carry a singlet that is not in canonical (|00>+|11>) form");
    }
    factors.push_back({{labels[l - 1], labels[lp - 1]}, pair_state.as_float()});
    labels.erase(labels.begin() + (lp - 1));
    labels.erase(labels.begin() + (l - 1));
    residual = std::move(rest);
  }
  if (!labels.empty()) factors.push_back({labels, residual});
  return factors;
}

StateVector assemble_factors(int n, const std::vector<Factor>& factors) {
  if (factors.empty()) throw std::invalid_argument("assemble_factors: no factors");
  std::vector<int> target;
  std::optional<StateVector> product;
  for (const auto& f : factors) {
    if (static_cast<int>(f.qubits.size()) != f.state.qubits()) {
      throw std::invalid_argument("factor qubit list does not match its state");
    }
    product = product ? tensor(*product, f.state) : f.state;
    target.insert(target.end(), f.qubits.begin(), f.qubits.end());
  }
  if (static_cast<int>(target.size()) != n) throw std::invalid_argument("factors do not cover the register");
  return permute_qubits(*product, target);
}

bool pairing_equal(const SingletPairing& p, const SingletPairing& q) {
  const auto size = [](const SingletPairing& s) { return 2 * static_cast<int>(s.pairs.size()) + (s.lone ? 1 : 0); };
  if (size(p) != size(q)) {
    throw std::invalid_argument("pairings describe " + std::to_string(size(p)) + " and " + std::to_string(size(q)) +
                                " qubits");
  }
  auto a = p.pairs;
  auto b = q.pairs;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

OrbitReport analyze(const StateVector& psi, const RankOptions& options) {
  const SideMatrix m = side_matrix(psi);
  OrbitReport report;
  report.n = psi.qubits();
  const MinimalityVerdict v = minimality(m, options, report.diagnostics);
  report.rank = v.rank.rank;
  report.orbit_dimension = v.orbit_dimension;
  report.min_orbit_dimension = v.min_orbit_dimension;
  report.is_minimal = v.minimal;

  const SpanTables tables = span_tables(m, options);
  report.pair_span = tables.pair;
  report.lone_span = tables.lone;
  report.diagnostics.min_pair_gap_ratio = tables.pair_gap;
  report.diagnostics.min_lone_gap_ratio = tables.lone_gap;
  if (v.minimal) {
    try {
      report.pairing = pairing_from_tables(report.n, tables, report.diagnostics);
    } catch (const InconsistentStructureError& e) {
      report.diagnostics.warnings.push_back(std::string("inconsistent structure: ") + e.what());
    }
  }
  return report;
}

}  // namespace luorbit
