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

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <utility>
#include <vector>

#include "luorbit/errors.hpp"
#include "luorbit/generators.hpp"
#include "luorbit/json_io.hpp"
#include "luorbit/lu_group.hpp"
#include "luorbit/orbit.hpp"
#include "luorbit/verify.hpp"

namespace py = pybind11;
using namespace luorbit;

namespace {

using PyPair = std::pair<int, int>;

RankOptions options(double tol, const std::string& backend) { return {tol, parse_backend(backend)}; }

std::vector<QubitPair> to_pairs(const std::vector<PyPair>& pairs) {
  std::vector<QubitPair> out;
  for (const auto& [a, b] : pairs) out.emplace_back(a, b);
  return out;
}

std::vector<PyPair> from_pairs(const std::vector<QubitPair>& pairs) {
  std::vector<PyPair> out;
  for (const auto& p : pairs) out.emplace_back(p.first, p.second);
  return out;
}

StateVector exact_from_strings(const std::vector<std::pair<std::string, std::string>>& amplitudes) {
  std::vector<GaussianRational> values;
  values.reserve(amplitudes.size());
  for (const auto& [re, im] : amplitudes) values.emplace_back(parse_rational(re), parse_rational(im));
  return StateVector::from_exact(std::move(values));
}

py::object json_to_py(const Json& doc) {
  return py::module_::import("json").attr("loads")(dump_json(doc, -1));
}

}  // namespace

PYBIND11_MODULE(_luorbit, m) {
  m.doc() = "Local unitary orbit dimensions of n-qubit pure states";

  auto error = py::register_exception<Error>(m, "Error");
  py::register_exception<ZeroVectorError>(m, "ZeroVectorError", error.ptr());
  py::register_exception<InconsistentStructureError>(m, "InconsistentStructureError", error.ptr());
  py::register_exception<NotMinimalError>(m, "NotMinimalError", error.ptr());
  py::register_exception<NonCanonicalFactorError>(m, "NonCanonicalFactorError", error.ptr());
  py::register_exception<ZeroResidualError>(m, "ZeroResidualError", error.ptr());
  py::register_exception<ParseError>(m, "ParseError", error.ptr());

  m.attr("DEFAULT_TOLERANCE") = kDefaultTolerance;

  py::class_<StateVector>(m, "StateVector")
      .def_static("from_amplitudes", &StateVector::from_amplitudes, py::arg("amplitudes"),
                  "Float-mode state; the amplitudes are normalized.")
      .def_static("from_exact", &exact_from_strings, py::arg("amplitudes"),
                  "Exact-mode state from (re, im) rational strings such as (\"1/2\", \"0\").")
      .def_static("from_json", [](const std::string& text) { return parse_state(text); }, py::arg("text"))
      .def("to_json", [](const StateVector& s) { return dump_json(state_to_json(s)); })
      .def_property_readonly("qubits", &StateVector::qubits)
      .def_property_readonly("is_exact", &StateVector::is_exact)
      .def_property_readonly("amplitudes", [](const StateVector& s) {
        return std::vector<Complex>(s.amplitudes().begin(), s.amplitudes().end());
      })
      .def("__len__", &StateVector::dimension)
      .def("__getitem__", [](const StateVector& s, Code code) {
        if (code >= s.dimension()) throw py::index_error();
        return s[code];
      })
      .def("__repr__", [](const StateVector& s) {
        return "<StateVector n=" + std::to_string(s.qubits()) + (s.is_exact() ? " exact>" : " float>");
      });

  m.def("basis_state", [](const std::string& bits) {
    const auto idx = MultiIndex::from_bits(bits);
    return basis_state(idx.qubits(), idx);
  }, py::arg("bits"), "Computational basis state, qubit 1 first: basis_state(\"01\").");
  m.def("ghz_state", &ghz_state, py::arg("n"));
  m.def("w_state", &w_state, py::arg("n"));
  m.def("singlet_product", [](int n, const std::vector<PyPair>& pairs, std::optional<int> lone) {
    return singlet_product(n, to_pairs(pairs), lone);
  }, py::arg("n"), py::arg("pairs"), py::arg("lone") = py::none());
  m.def("random_state", &random_state, py::arg("n"), py::arg("seed"));
  m.def("tensor", &tensor, py::arg("first"), py::arg("second"));
  m.def("permute_qubits", [](const StateVector& s, const std::vector<int>& target) {
    return permute_qubits(s, target);
  }, py::arg("state"), py::arg("target"));
  m.def("contract_pair", &contract_pair, py::arg("state"), py::arg("l"), py::arg("l_prime"), py::arg("tol") = 1e-10);
  m.def("inner_product", &inner_product, py::arg("a"), py::arg("b"));

  m.def("side_matrix", [](const StateVector& s) { return SideMatrix(s).columns(); }, py::arg("state"),
        "The 2^n x (3n+1) matrix of generator actions, last column -i psi.");

  m.def("min_orbit_dimension", &min_orbit_dimension, py::arg("n"));
  m.def("orbit_dimension", [](const StateVector& s, double tol, const std::string& backend) {
    return orbit_dimension(s, options(tol, backend));
  }, py::arg("state"), py::arg("tol") = kDefaultTolerance, py::arg("backend") = "float");
  m.def("is_minimum_orbit", [](const StateVector& s, double tol, const std::string& backend) {
    return is_minimum_orbit(s, options(tol, backend)).minimal;
  }, py::arg("state"), py::arg("tol") = kDefaultTolerance, py::arg("backend") = "float");
  m.def("span_dim", [](const StateVector& s, const std::vector<int>& triples, bool include_last, double tol,
                       const std::string& backend) {
    return span_dim(SideMatrix(s), triples, include_last, options(tol, backend));
  }, py::arg("state"), py::arg("triples"), py::arg("include_last") = false, py::arg("tol") = kDefaultTolerance,
        py::arg("backend") = "float");
  m.def("complement_dim", [](const StateVector& s, int inside, const std::vector<int>& against, bool include_last,
                             double tol) {
    return complement_dim(SideMatrix(s), inside, ColumnSelector(against, include_last), tol);
  }, py::arg("state"), py::arg("inside"), py::arg("against"), py::arg("include_last") = false,
        py::arg("tol") = kDefaultTolerance);
  m.def("detect_singlet_pairs", [](const StateVector& s, double tol, const std::string& backend) {
    return from_pairs(detect_singlet_pairs(s, options(tol, backend)));
  }, py::arg("state"), py::arg("tol") = kDefaultTolerance, py::arg("backend") = "float");
  m.def("detect_unentangled", [](const StateVector& s, double tol, const std::string& backend) {
    return detect_unentangled(s, options(tol, backend));
  }, py::arg("state"), py::arg("tol") = kDefaultTolerance, py::arg("backend") = "float");

  m.def("classify", [](const StateVector& s, double tol, const std::string& backend) {
    return json_to_py(classification_to_json(classify_min_orbit(s, options(tol, backend))));
  }, py::arg("state"), py::arg("tol") = kDefaultTolerance, py::arg("backend") = "float",
        "{'pairs': [[l, l'], ...], 'lone': j or None} or {'not_minimal': True, 'orbit_dimension': d}.");
  m.def("analyze", [](const StateVector& s, double tol, const std::string& backend) {
    return json_to_py(report_to_json(analyze(s, options(tol, backend))));
  }, py::arg("state"), py::arg("tol") = kDefaultTolerance, py::arg("backend") = "float");
  m.def("factor_state", [](const StateVector& s) {
    std::vector<std::pair<std::vector<int>, StateVector>> out;
    for (auto& f : factor_state(s)) out.emplace_back(std::move(f.qubits), std::move(f.state));
    return out;
  }, py::arg("state"), "List of (qubits, factor state) pairs.");
  m.def("pairings_equal", [](const std::vector<PyPair>& p, const std::vector<PyPair>& q) {
    return pairing_equal(SingletPairing(to_pairs(p), std::nullopt), SingletPairing(to_pairs(q), std::nullopt));
  }, py::arg("p"), py::arg("q"));

  m.def("random_su2", &random_su2, py::arg("seed"));
  m.def("is_special_unitary", &is_special_unitary, py::arg("u"), py::arg("tol") = kUnitaryTolerance);
  m.def("adjoint_rep", &adjoint_rep, py::arg("u"), "Matrix of X -> U^dagger X U in the basis (A, B, C).");
  m.def("random_local_unitary", [](int n, std::uint64_t seed) { return LocalUnitary::random(n, seed).factors(); },
        py::arg("n"), py::arg("seed"));
  m.def("apply_local", [](const StateVector& s, const std::vector<Su2>& factors) {
    return apply_local(s, LocalUnitary(factors));
  }, py::arg("state"), py::arg("factors"));

  m.def("suite_names", &suite_names);
  m.def("verify_proposition", [](const std::string& name, int n, int trials, std::uint64_t seed) {
    return json_to_py(suite_report_to_json(verify_proposition(name, n, trials, seed)));
  }, py::arg("name"), py::arg("n"), py::arg("trials"), py::arg("seed") = 0);
}
