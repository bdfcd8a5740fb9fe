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

// luorbit: orbit dimension, singlet detection and minimum-orbit
// classification of n-qubit states stored as JSON files.
//
// Exit codes: 0 success, 1 analysis error, 2 usage error.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "luorbit/errors.hpp"
#include "luorbit/json_io.hpp"
#include "luorbit/lu_group.hpp"
#include "luorbit/orbit.hpp"
#include "luorbit/random.hpp"
#include "luorbit/verify.hpp"

namespace {

using namespace luorbit;

constexpr int kExitAnalysis = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct AnalysisFlags {
  double tol = kDefaultTolerance;
  std::string backend = "float";
  std::optional<std::uint64_t> lu_seed;

  RankOptions options() const { return {tol, parse_backend(backend)}; }
};

void add_analysis_flags(CLI::App* cmd, AnalysisFlags& flags) {
  cmd->add_option("--tol", flags.tol, "Relative singular-value threshold")->check(CLI::PositiveNumber);
  cmd->add_option("--backend", flags.backend, "Rank backend")->check(CLI::IsMember({"float", "exact"}));
  cmd->add_option("--lu-seed", flags.lu_seed, "Apply a random local unitary before analysis");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

StateVector load_state(const std::string& path, const AnalysisFlags& flags, std::uint64_t stream = 0) {
  StateVector psi = parse_state(read_file(path));
  if (flags.lu_seed) {
    if (flags.backend == "exact") throw UsageError("--backend exact cannot be combined with --lu-seed");
    psi = apply_local(psi, LocalUnitary::random(psi.qubits(), derive_seed(*flags.lu_seed, stream)));
  }
  if (flags.backend == "exact" && !psi.is_exact()) {
    throw UsageError(path + " is a float-mode state; --backend exact needs an exact-mode file");
  }
  return psi;
}

void print(const Json& doc) { std::cout << dump_json(doc) << '\n'; }

int run_analyze(const std::string& path, const AnalysisFlags& flags, bool dump_matrix) {
  const StateVector psi = load_state(path, flags);
  if (dump_matrix) {
    print(side_matrix_to_json(side_matrix(psi)));
    return 0;
  }
  print(report_to_json(analyze(psi, flags.options())));
  return 0;
}

int run_classify(const std::string& path, const AnalysisFlags& flags) {
  const StateVector psi = load_state(path, flags);
  print(classification_to_json(classify_min_orbit(psi, flags.options())));
  return 0;
}

int run_compare(const std::string& a, const std::string& b, const AnalysisFlags& flags) {
  const Classification ca = classify_min_orbit(load_state(a, flags, 0), flags.options());
  const Classification cb = classify_min_orbit(load_state(b, flags, 1), flags.options());
  for (const auto& [path, c] : {std::pair{a, &ca}, std::pair{b, &cb}}) {
    if (!c->minimal()) {
      const auto& nm = std::get<NotMinimal>(c->result);
      std::cerr << "error: " << path << " is not a minimum-orbit state (orbit dimension " << nm.orbit_dimension
                << ", minimum " << nm.min_orbit_dimension << ")\n";
      return kExitAnalysis;
    }
  }
  Json doc;
  doc["equal"] = pairing_equal(ca.pairing(), cb.pairing());
  doc["a"] = pairing_to_json(ca.pairing());
  doc["b"] = pairing_to_json(cb.pairing());
  print(doc);
  return 0;
}

struct GenerateFlags {
  std::string kind;
  std::optional<int> qubits;
  std::string pairs;
  std::optional<int> lone;
  std::string bits;
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> lu_seed;
  std::string mode = "exact";
  std::string out;
};

int require_qubits(const GenerateFlags& f) {
  if (!f.qubits) throw UsageError(f.kind + " needs --qubits");
  return *f.qubits;
}

int run_generate(const GenerateFlags& f) {
  std::optional<StateVector> psi;
  try {
    if (f.kind == "singlet-product") {
      if (f.pairs.empty()) throw UsageError("singlet-product needs --pairs, e.g. --pairs 1:2,3:4");
      const auto pairs = parse_pairs(f.pairs);
      const int n = f.qubits.value_or(2 * static_cast<int>(pairs.size()) + (f.lone ? 1 : 0));
      psi = singlet_product(n, pairs, f.lone);
    } else if (f.kind == "ghz") {
      psi = ghz_state(require_qubits(f));
    } else if (f.kind == "w") {
      psi = w_state(require_qubits(f));
    } else if (f.kind == "basis") {
      if (f.bits.empty()) throw UsageError("basis needs --bits, e.g. --bits 0101");
      const MultiIndex index = MultiIndex::from_bits(f.bits);
      if (f.qubits && *f.qubits != index.qubits()) throw UsageError("--qubits does not match --bits");
      psi = basis_state(index.qubits(), index);
    } else {
      psi = random_state(require_qubits(f), f.seed);
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  } catch (const std::out_of_range& e) {
    throw UsageError(e.what());
  }
  if (f.lu_seed) psi = apply_local(*psi, LocalUnitary::random(psi->qubits(), *f.lu_seed));
  if (f.mode == "float") psi = psi->as_float();
  const std::string text = dump_json(state_to_json(*psi)) + '\n';
  if (f.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(f.out, std::ios::binary);
    if (!out) throw UsageError("cannot write " + f.out);
    out << text;
  }
  return 0;
}

struct VerifyFlags {
  std::string suite = "all";
  int qubits = 4;
  int trials = 100;
  std::uint64_t seed = 0;
  bool json = false;
};

int run_verify(const VerifyFlags& f) {
  std::vector<std::string> names;
  if (f.suite == "all") {
    names = suite_names();
  } else {
    const auto& known = suite_names();
    if (std::find(known.begin(), known.end(), f.suite) == known.end()) {
      throw UsageError("unknown suite '" + f.suite + "'");
    }
    names.push_back(f.suite);
  }
  int failures = 0;
  for (const auto& name : names) {
    const SuiteReport r = verify_proposition(name, f.qubits, f.trials, f.seed);
    if (f.json) {
      std::cout << dump_json(suite_report_to_json(r), -1) << '\n';
    } else {
      const char* tag = r.skipped ? "SKIP" : r.passed() ? "PASS" : "FAIL";
      std::cout << tag << ' ' << name << " n=" << r.n << " trials=" << r.trials << " checked=" << r.checked;
      if (r.skipped) std::cout << " (" << *r.skipped << ')';
      std::cout << '\n';
      if (!r.skipped && r.checked == 0) std::cout << "  no instance met the hypothesis\n";
      for (const auto& c : r.counterexamples) {
        std::cout << "  trial " << c.trial << ": " << c.detail << '\n';
        if (c.state) std::cout << "  state " << dump_json(state_to_json(*c.state), -1) << '\n';
      }
    }
    if (!r.skipped && !r.passed()) ++failures;
  }
  if (!f.json) std::cout << (failures ? "FAILED " : "OK ") << failures << " failing suite(s)\n";
  return failures ? kExitAnalysis : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Local-unitary orbit dimension and minimum-orbit classification of n-qubit states"};
  app.require_subcommand(1);

  AnalysisFlags analysis;
  std::string file_a, file_b;
  bool dump_matrix = false;

  auto* analyze_cmd = app.add_subcommand("analyze", "Orbit report for a state file");
  analyze_cmd->add_option("state", file_a, "State JSON file")->required();
  analyze_cmd->add_flag("--dump-matrix", dump_matrix, "Print the columns of M instead of the report");
  add_analysis_flags(analyze_cmd, analysis);

  auto* classify_cmd = app.add_subcommand("classify", "Singlet pairing of a minimum-orbit state");
  classify_cmd->add_option("state", file_a, "State JSON file")->required();
  add_analysis_flags(classify_cmd, analysis);

  auto* compare_cmd = app.add_subcommand("compare", "Whether two minimum-orbit states share their pairing");
  compare_cmd->add_option("state_a", file_a, "First state JSON file")->required();
  compare_cmd->add_option("state_b", file_b, "Second state JSON file")->required();
  add_analysis_flags(compare_cmd, analysis);

  GenerateFlags gen;
  auto* generate_cmd = app.add_subcommand("generate", "Write a state file");
  generate_cmd->add_option("kind", gen.kind, "State family")
      ->required()
      ->check(CLI::IsMember({"singlet-product", "ghz", "w", "basis", "random"}));
  generate_cmd->add_option("--qubits", gen.qubits, "Qubit count");
  generate_cmd->add_option("--pairs", gen.pairs, "Pairs for singlet-product, e.g. 1:2,3:4");
  generate_cmd->add_option("--lone", gen.lone, "Lone qubit for singlet-product with odd n");
  generate_cmd->add_option("--bits", gen.bits, "Bit string for basis, qubit 1 first");
  generate_cmd->add_option("--seed", gen.seed, "Seed for random");
  generate_cmd->add_option("--lu-seed", gen.lu_seed, "Apply a random local unitary (result is float mode)");
  generate_cmd->add_option("--mode", gen.mode, "Numeric mode of the written file")
      ->check(CLI::IsMember({"float", "exact"}));
  generate_cmd->add_option("--out", gen.out, "Output path (default: standard output)");

  VerifyFlags ver;
  auto* verify_cmd = app.add_subcommand("verify", "Run property suites on random instances");
  verify_cmd->add_option("--suite", ver.suite, "Suite name or 'all'");
  verify_cmd->add_option("--qubits", ver.qubits, "Qubit count")->check(CLI::Range(1, 10));
  verify_cmd->add_option("--trials", ver.trials, "Instances per suite")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--seed", ver.seed, "Root seed");
  verify_cmd->add_flag("--json", ver.json, "One JSON report per line");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*analyze_cmd) return run_analyze(file_a, analysis, dump_matrix);
    if (*classify_cmd) return run_classify(file_a, analysis);
    if (*compare_cmd) return run_compare(file_a, file_b, analysis);
    if (*generate_cmd) return run_generate(gen);
    if (*verify_cmd) return run_verify(ver);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InconsistentStructureError& e) {
    std::cerr << "error: inconsistent structure: " << e.what() << '\n';
    return kExitAnalysis;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitAnalysis;
  }
  return kExitUsage;
}
