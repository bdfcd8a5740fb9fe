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

#include "luorbit/verify.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "luorbit/errors.hpp"
#include "luorbit/generators.hpp"
#include "luorbit/lie_action.hpp"
#include "luorbit/lu_group.hpp"
#include "luorbit/orbit.hpp"
#include "luorbit/random.hpp"
#include "luorbit/rank.hpp"

namespace luorbit {
namespace {

constexpr double kOrthogonalityTol = 1e-10;
constexpr double kIdentityTol = 1e-12;
constexpr double kPurityTol = 1e-8;
constexpr std::size_t kMaxCounterexamples = 10;

/// Per-trial context handed to a suite body.
struct Trial {
  int n;
  int index;
  Rng rng;
  SuiteReport& report;
  bool hit = false;

  void fail(const StateVector& psi, const std::string& detail) {
    if (report.counterexamples.size() < kMaxCounterexamples) report.counterexamples.push_back({index, detail, psi});
  }
  void check(bool ok, const StateVector& psi, const std::string& detail) {
    hit = true;
    if (!ok) fail(psi, detail);
  }
};

using SuiteBody = std::function<void(Trial&)>;

struct Suite {
  int min_qubits;
  SuiteBody body;
};

std::string str(const std::vector<int>& v) {
  std::ostringstream s;
  s << '{';
  for (std::size_t i = 0; i < v.size(); ++i) s << (i ? "," : "") << v[i];
  s << '}';
  return s.str();
}

std::vector<int> mask_to_triples(int n, unsigned mask) {
  std::vector<int> t;
  for (int k = 1; k <= n; ++k) {
    if (mask & (1u << (k - 1))) t.push_back(k);
  }
  return t;
}

std::vector<int> other_triples(int n, std::initializer_list<int> skip) {
  std::vector<int> t;
  for (int k = 1; k <= n; ++k) {
    if (std::find(skip.begin(), skip.end(), k) == skip.end()) t.push_back(k);
  }
  return t;
}

double real_dot(const Eigen::VectorXcd& u, const Eigen::VectorXcd& v) { return u.dot(v).real(); }

/// Reduced density matrix on the listed qubits (in that order).
Eigen::MatrixXcd reduced_density(const StateVector& psi, const std::vector<int>& keep) {
  const int n = psi.qubits();
  const auto dk = Eigen::Index{1} << keep.size();
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(dk, dk);
  // Group amplitudes by the bits outside `keep`.
  Code keep_mask = 0;
  for (int q : keep) keep_mask |= qubit_mask(n, q);
  auto sub_index = [&](Code code) {
    Code s = 0;
    for (int q : keep) s = (s << 1) | static_cast<Code>(bit_of(code, n, q));
    return s;
  };
  for (Code a = 0; a < psi.dimension(); ++a) {
    if (psi[a] == Complex(0.0)) continue;
    for (Code b = 0; b < psi.dimension(); ++b) {
      if ((a & ~keep_mask) != (b & ~keep_mask)) continue;
      rho(static_cast<Eigen::Index>(sub_index(a)), static_cast<Eigen::Index>(sub_index(b))) +=
          psi[a] * std::conj(psi[b]);
    }
  }
  return rho;
}

double purity(const Eigen::MatrixXcd& rho) { return (rho * rho).trace().real(); }

StateVector scramble(const StateVector& psi, Rng& rng) {
  return apply_local(psi, LocalUnitary::random(psi.qubits(), rng.next()));
}

StateVector pair_on(int n, int l, int lp, const StateVector& rest) {
  const StateVector pair = singlet_product(2, {QubitPair(1, 2)}, std::nullopt);
  if (n == 2) return pair;
  std::vector<int> others = other_triples(n, {l, lp});
  return embed_blocks({pair, rest}, {{l, lp}, others});
}

// ---------------------------------------------------------------------------

void triple_orthogonality(Trial& t) {
  const bool exact = t.index % 4 == 3;
  const StateVector psi = exact ? random_rational_state(t.n, t.rng) : sample_mixed(t.n, t.index, t.rng);
  const SideMatrix m(psi);
  for (int k = 1; k <= t.n; ++k) {
    for (int a = 0; a < 3; ++a) {
      for (int b = a + 1; b < 3; ++b) {
        const int ca = column_index(k, kGenerators[a]);
        const int cb = column_index(k, kGenerators[b]);
        if (exact) {
          mpq_class dot = 0;
          const auto& cols = m.exact_columns();
          for (std::size_t j = 0; j < psi.dimension(); ++j) {
            dot += cols[ca][j].re * cols[cb][j].re + cols[ca][j].im * cols[cb][j].im;
          }
          t.check(sgn(dot) == 0, psi, "exact triple " + std::to_string(k) + " not orthogonal");
        } else {
          const double dot = real_dot(m.column(ca), m.column(cb));
          t.check(std::abs(dot) <= kOrthogonalityTol, psi,
                  "triple " + std::to_string(k) + " real dot " + std::to_string(dot));
        }
      }
    }
  }
}

void lu_invariance(Trial& t) {
  const StateVector psi = sample_mixed(t.n, t.index, t.rng);
  const LocalUnitary u = LocalUnitary::random(t.n, t.rng.next());
  const StateVector moved = apply_local(psi, u);
  const SideMatrix m(psi);
  const SideMatrix mu(moved);
  for (unsigned mask = 1; mask < (1u << t.n); ++mask) {
    const auto triples = mask_to_triples(t.n, mask);
    for (bool last : {false, true}) {
      const int before = span_dim(m, triples, last);
      const int after = span_dim(mu, triples, last);
      t.check(before == after, psi,
              "span of " + str(triples) + (last ? "+last" : "") + " changed from " + std::to_string(before) + " to " +
                  std::to_string(after));
    }
  }
  // Each new triple is U applied to the old triple rotated by Ad(U_k).
  for (int k = 1; k <= t.n; ++k) {
    const Eigen::Matrix3d r = adjoint_rep(u.factor(k));
    for (int g = 0; g < 3; ++g) {
      Eigen::VectorXcd combo = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(psi.dimension()));
      for (int i = 0; i < 3; ++i) combo += r(i, g) * m.column(k, kGenerators[i]);
      std::vector<Complex> v(combo.data(), combo.data() + combo.size());
      for (int q = 1; q <= t.n; ++q) apply_single_qubit<Complex>(v, t.n, q, u.factor(q));
      const Eigen::Map<const Eigen::VectorXcd> rebuilt(v.data(), combo.size());
      const double err = (rebuilt - mu.column(k, kGenerators[g])).cwiseAbs().maxCoeff();
      t.check(err <= 1e-10, psi, "triple " + std::to_string(k) + " is not the adjoint rotation (err " +
                                      std::to_string(err) + ")");
    }
  }
}

void two_common_strong(Trial& t) {
  const auto order = random_permutation(t.n, t.rng);
  const int l = std::min(order[0], order[1]);
  const int lp = std::max(order[0], order[1]);
  const bool exact = t.index % 2 == 1;
  std::optional<StateVector> rest;
  if (t.n > 2) rest = exact ? random_rational_state(t.n - 2, t.rng) : random_state(t.n - 2, t.rng.next());
  const StateVector psi = t.n == 2 ? singlet_product(2, {QubitPair(1, 2)}, std::nullopt)
                                   : pair_on(t.n, l, lp, *rest);
  const SideMatrix m(psi);
  const RankOptions options{kDefaultTolerance, psi.is_exact() ? Backend::Exact : Backend::Float};
  auto diff = [&](Generator g, double sign) {
    return (m.column(l, g) - sign * m.column(lp, g)).cwiseAbs().maxCoeff();
  };
  // Hypothesis of the lemma holds by construction; confirm it.
  t.check(diff(Generator::A, 1.0) <= kIdentityTol && diff(Generator::C, 1.0) <= kIdentityTol, psi,
          "constructed instance violates A_l = A_l' or C_l = C_l'");
  t.check(diff(Generator::B, -1.0) <= kIdentityTol, psi, "B_l != -B_l'");
  if (psi.is_exact()) {
    const auto& cols = m.exact_columns();
    const auto& bl = cols[column_index(l, Generator::B)];
    const auto& blp = cols[column_index(lp, Generator::B)];
    bool anti = true;
    for (std::size_t j = 0; j < bl.size(); ++j) anti = anti && bl[j] == -blp[j];
    t.check(anti, psi, "exact B_l != -B_l'");
  }
  const int pair[] = {l, lp};
  t.check(span_dim(m, pair, false, options) == 3, psi, "dim <T_l, T_l'> != 3");
  std::vector<int> outside;
  for (int j : other_triples(t.n, {l, lp})) {
    for (Generator g : kGenerators) outside.push_back(column_index(j, g));
  }
  outside.push_back(m.last_column());
  double worst = 0.0;
  for (int k : {l, lp}) {
    for (Generator g : kGenerators) {
      for (int c : outside) worst = std::max(worst, std::abs(real_dot(m.column(k, g), m.column(c))));
    }
  }
  t.check(worst <= kOrthogonalityTol, psi, "<T_l, T_l'> not orthogonal to the other columns (" +
                                               std::to_string(worst) + ")");
}

void two_common_strong_gen(Trial& t) {
  const StateVector psi = t.index % 2 == 0 ? sample_family(Family::SingletTimesRest, t.n, t.rng)
                                           : sample_mixed(t.n, t.index, t.rng);
  const SideMatrix m(psi);
  for (int l = 1; l <= t.n; ++l) {
    for (int lp = l + 1; lp <= t.n; ++lp) {
      const int pair[] = {l, lp};
      const int dim = span_dim(m, pair, false);
      if (dim > 4) continue;
      const std::string where = "pair (" + std::to_string(l) + "," + std::to_string(lp) + ")";
      t.check(dim == 3, psi, where + " spans " + std::to_string(dim) + " <= 4 but not 3");
      const ColumnSelector against(other_triples(t.n, {l, lp}), true);
      for (int k : {l, lp}) {
        const int c = complement_dim(m, k, against);
        t.check(c == 3, psi, where + ": only " + std::to_string(c) + " directions of T_" + std::to_string(k) +
                                 " orthogonal to the other columns");
      }
    }
  }
}

void two_trip_span5(Trial& t) {
  const StateVector psi = t.index % 2 == 0 ? scramble(sample_family(Family::GenericPairTimesRest, t.n, t.rng), t.rng)
                                           : sample_mixed(t.n, t.index, t.rng);
  const SideMatrix m(psi);
  for (int l = 1; l <= t.n; ++l) {
    for (int lp = l + 1; lp <= t.n; ++lp) {
      const int pair[] = {l, lp};
      if (span_dim(m, pair, false) != 5) continue;
      const std::string where = "pair (" + std::to_string(l) + "," + std::to_string(lp) + ")";
      const ColumnSelector against(other_triples(t.n, {l, lp}), true);
      const Eigen::MatrixXd zl = complement_basis(m, l, against);
      const Eigen::MatrixXd zlp = complement_basis(m, lp, against);
      t.check(zl.cols() >= 2 && zlp.cols() >= 2, psi,
              where + ": complement dims " + std::to_string(zl.cols()) + "," + std::to_string(zlp.cols()));
      Eigen::MatrixXd both(zl.rows(), zl.cols() + zlp.cols());
      both << zl, zlp;
      const int independent = float_rank(both).rank;
      t.check(independent >= 4, psi, where + ": only " + std::to_string(independent) + " independent vectors");
    }
  }
}

void min_rank_strong(Trial& t) {
  const StateVector psi = sample_mixed(t.n, t.index, t.rng);
  const SideMatrix m(psi);
  for (unsigned mask = 1; mask < (1u << t.n); ++mask) {
    const auto triples = mask_to_triples(t.n, mask);
    const int q = static_cast<int>(triples.size());
    const int bound = min_orbit_dimension(q) + 1;
    const int dim = span_dim(m, triples, true);
    t.check(dim >= bound, psi, "span of " + str(triples) + "+last is " + std::to_string(dim) + " < " +
                                   std::to_string(bound));
  }
}

void bipartite_ranks_add(Trial& t) {
  const int n1 = t.rng.uniform_int(1, t.n - 1);
  const int n2 = t.n - n1;
  const StateVector a = sample_mixed(n1, t.index, t.rng);
  const StateVector b = sample_mixed(n2, t.index / kFamilyCount + t.index, t.rng);
  const StateVector psi = tensor(a, b);
  const SideMatrix m(psi), ma(a), mb(b);
  const int da = orbit_dimension(ma), db = orbit_dimension(mb), d = orbit_dimension(m);
  t.check(d == da + db, psi, "orbit dims " + std::to_string(d) + " != " + std::to_string(da) + " + " +
                                 std::to_string(db));
  std::vector<int> first(static_cast<std::size_t>(n1)), second(static_cast<std::size_t>(n2));
  for (int k = 1; k <= n1; ++k) first[k - 1] = k;
  for (int k = 1; k <= n2; ++k) second[k - 1] = n1 + k;
  t.check(span_dim(m, first, true) == da + 1, psi, "rank M_1 != dim <S_1>");
  t.check(span_dim(m, second, true) == db + 1, psi, "rank M_2 != dim <S_2>");
  const auto sub = random_subset(n1, t.rng.uniform_int(1, n1), t.rng);
  t.check(span_dim(ma, sub, false) == span_dim(m, sub, false), psi,
          "span of " + str(sub) + " differs between M_1 and M");
  auto sub2 = random_subset(n2, t.rng.uniform_int(1, n2), t.rng);
  std::vector<int> shifted;
  for (int k : sub2) shifted.push_back(k + n1);
  t.check(span_dim(mb, sub2, false) == span_dim(m, shifted, false), psi,
          "span of " + str(sub2) + " differs between M_2 and M");
}

void two_trip_span3_factors(Trial& t) {
  const StateVector psi = t.index % 2 == 0 ? sample_family(Family::SingletTimesRest, t.n, t.rng)
                                           : sample_mixed(t.n, t.index, t.rng);
  const SideMatrix m(psi);
  for (int l = 1; l <= t.n; ++l) {
    for (int lp = l + 1; lp <= t.n; ++lp) {
      const int pair[] = {l, lp};
      const bool span3 = span_dim(m, pair, false) == 3;
      // Singlet factor on (l, l') iff the pair's reduced state is pure with
      // maximally mixed one-qubit marginals.
      const Eigen::MatrixXcd rho = reduced_density(psi, {l, lp});
      const Eigen::MatrixXcd marginal = reduced_density(psi, {l});
      const bool factor = std::abs(purity(rho) - 1.0) <= kPurityTol &&
                          (marginal - 0.5 * Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff() <= kPurityTol;
      t.check(span3 == factor, psi,
              "pair (" + std::to_string(l) + "," + std::to_string(lp) + "): span3=" + std::to_string(span3) +
                  " singlet factor=" + std::to_string(factor));
    }
  }
}

void lone_span3(Trial& t) {
  const StateVector psi = t.index % 2 == 0 ? sample_family(Family::Blocks, t.n, t.rng)
                                           : sample_mixed(t.n, t.index, t.rng);
  const SideMatrix m(psi);
  for (int j = 1; j <= t.n; ++j) {
    const int triple[] = {j};
    const bool span3 = span_dim(m, triple, true) == 3;
    const bool unentangled = std::abs(purity(reduced_density(psi, {j})) - 1.0) <= kPurityTol;
    t.check(span3 == unentangled, psi, "qubit " + std::to_string(j) + ": span3=" + std::to_string(span3) +
                                           " unentangled=" + std::to_string(unentangled));
  }
}

void unentangled_rank(Trial& t) {
  const int k = t.rng.uniform_int(1, t.n);
  const auto order = random_permutation(t.n, t.rng);
  std::vector<StateVector> blocks;
  std::vector<std::vector<int>> positions;
  for (int i = 0; i < k; ++i) {
    blocks.push_back(random_state(1, t.rng.next()));
    positions.push_back({order[i]});
  }
  if (k < t.n) {
    blocks.push_back(random_state(t.n - k, t.rng.next()));
    positions.emplace_back(order.begin() + k, order.end());
  }
  const StateVector psi = scramble(embed_blocks(blocks, positions), t.rng);
  std::vector<int> lone(order.begin(), order.begin() + k);
  std::sort(lone.begin(), lone.end());
  const int dim = span_dim(SideMatrix(psi), lone, true);
  t.check(dim == 2 * k + 1, psi, "k=" + std::to_string(k) + " unentangled qubits " + str(lone) + " span " +
                                     std::to_string(dim));
}

void pair_span_trichotomy(Trial& t) {
  const StateVector psi = sample_mixed(t.n, t.index, t.rng);
  const SideMatrix m(psi);
  for (int l = 1; l <= t.n; ++l) {
    for (int lp = l + 1; lp <= t.n; ++lp) {
      const int pair[] = {l, lp};
      const int dim = span_dim(m, pair, false);
      t.check(dim == 3 || dim == 5 || dim == 6, psi,
              "pair (" + std::to_string(l) + "," + std::to_string(lp) + ") spans " + std::to_string(dim));
    }
  }
}

void classification_roundtrip(Trial& t) {
  const SingletPairing expected = random_pairing(t.n, t.rng);
  const StateVector psi = scramble(singlet_product(t.n, expected), t.rng);
  try {
    const Classification c = classify_min_orbit(psi);
    if (!c.minimal()) {
      t.check(false, psi, "scrambled singlet product " + expected.to_string() + " classified as not minimal");
      return;
    }
    t.check(pairing_equal(c.pairing(), expected) && c.pairing().lone == expected.lone, psi,
            "recovered " + c.pairing().to_string() + ", generated " + expected.to_string());
  } catch (const InconsistentStructureError& e) {
    t.check(false, psi, std::string("inconsistent structure: ") + e.what());
  }
}

const std::map<std::string, Suite, std::less<>>& registry() {
  static const std::map<std::string, Suite, std::less<>> suites = {
      {"triplesprop", {1, triple_orthogonality}},
      {"ranktripluinv", {1, lu_invariance}},
      {"twocommonstrong", {2, two_common_strong}},
      {"twocommonstronggen", {2, two_common_strong_gen}},
      {"twotripspan5", {2, two_trip_span5}},
      {"minrankMstrong", {1, min_rank_strong}},
      {"bipartiteranksadd", {2, bipartite_ranks_add}},
      {"twotripspan3factors", {2, two_trip_span3_factors}},
      {"trippluslonelyspan3", {1, lone_span3}},
      {"unentrank", {1, unentangled_rank}},
      {"pair_span_trichotomy", {2, pair_span_trichotomy}},
      {"minorbclassthm_roundtrip", {1, classification_roundtrip}},
  };
  return suites;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "triplesprop",       "ranktripluinv",       "twocommonstrong",     "twocommonstronggen",
      "twotripspan5",      "minrankMstrong",      "bipartiteranksadd",   "twotripspan3factors",
      "trippluslonelyspan3", "unentrank",         "pair_span_trichotomy", "minorbclassthm_roundtrip",
  };
  return names;
}

SuiteReport verify_proposition(std::string_view name, int n, int trials, std::uint64_t seed) {
  const auto it = registry().find(name);
  if (it == registry().end()) throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
  check_qubit_count(n);
  if (trials < 1) throw std::invalid_argument("trials must be positive");
  SuiteReport report;
  report.name = std::string(name);
  report.n = n;
  report.trials = trials;
  if (n < it->second.min_qubits) {
    report.skipped = "needs at least " + std::to_string(it->second.min_qubits) + " qubits";
    return report;
  }
  const Rng root(seed);
  for (int i = 0; i < trials; ++i) {
    Trial trial{n, i, root.split(static_cast<std::uint64_t>(i)), report};
    try {
      it->second.body(trial);
    } catch (const std::exception& e) {
      trial.hit = true;
      if (report.counterexamples.size() < kMaxCounterexamples) {
        report.counterexamples.push_back({i, std::string("exception: ") + e.what(), std::nullopt});
      }
    }
    if (trial.hit) ++report.checked;
  }
  return report;
}

}  // namespace luorbit
