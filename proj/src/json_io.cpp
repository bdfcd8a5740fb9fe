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

#include "luorbit/json_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "luorbit/errors.hpp"

namespace luorbit {

Json state_to_json(const StateVector& psi) {
  Json doc;
  doc["n"] = psi.qubits();
  Json amps = Json::array();
  if (psi.is_exact()) {
    doc["mode"] = "exact";
    for (const auto& c : psi.exact_amplitudes()) amps.push_back({rational_to_string(c.re), rational_to_string(c.im)});
  } else {
    doc["mode"] = "float";
    for (const auto& c : psi.amplitudes()) amps.push_back({c.real(), c.imag()});
  }
  doc["amplitudes"] = std::move(amps);
  return doc;
}

namespace {

mpq_class exact_part(const Json& v, std::size_t index) {
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw ParseError("amplitude " + std::to_string(index) + ": " + e.what());
    }
  }
  if (v.is_number_integer()) return mpq_class(mpz_class(std::to_string(v.get<long long>())));
  throw ParseError("amplitude " + std::to_string(index) + ": exact mode expects rational strings such as \"1/2\"");
}

double float_part(const Json& v, std::size_t index) {
  if (!v.is_number()) throw ParseError("amplitude " + std::to_string(index) + ": float mode expects numbers");
  return v.get<double>();
}

}  // namespace

StateVector state_from_json(const Json& doc) {
  if (!doc.is_object()) throw ParseError("state file must be a JSON object");
  if (!doc.contains("n") || !doc["n"].is_number_integer()) throw ParseError("state file needs an integer \"n\"");
  const auto n = doc["n"].get<long long>();
  if (n < 1 || n > kMaxQubits) throw ParseError("\"n\" must be in [1, " + std::to_string(kMaxQubits) + "]");
  std::string mode = "float";
  if (doc.contains("mode")) {
    if (!doc["mode"].is_string()) throw ParseError("\"mode\" must be \"float\" or \"exact\"");
    mode = doc["mode"].get<std::string>();
    if (mode != "float" && mode != "exact") throw ParseError("\"mode\" must be \"float\" or \"exact\"");
  }
  if (!doc.contains("amplitudes") || !doc["amplitudes"].is_array()) {
    throw ParseError("state file needs an \"amplitudes\" array");
  }
  const Json& amps = doc["amplitudes"];
  const std::size_t dim = std::size_t{1} << n;
  if (amps.size() != dim) {
    throw ParseError("expected " + std::to_string(dim) + " amplitudes for n = " + std::to_string(n) + ", got " +
                     std::to_string(amps.size()));
  }
  for (std::size_t i = 0; i < dim; ++i) {
    if (!amps[i].is_array() || amps[i].size() != 2) {
      throw ParseError("amplitude " + std::to_string(i) + " must be a [re, im] pair");
    }
  }
  if (mode == "exact") {
    std::vector<GaussianRational> values(dim);
    for (std::size_t i = 0; i < dim; ++i) values[i] = GaussianRational(exact_part(amps[i][0], i), exact_part(amps[i][1], i));
    return StateVector::from_exact(std::move(values));
  }
  std::vector<Complex> values(dim);
  for (std::size_t i = 0; i < dim; ++i) values[i] = {float_part(amps[i][0], i), float_part(amps[i][1], i)};
  return StateVector::from_amplitudes(std::move(values));
}

StateVector parse_state(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  return state_from_json(doc);
}

Json pairing_to_json(const SingletPairing& pairing) {
  Json pairs = Json::array();
  for (const auto& p : pairing.pairs) pairs.push_back({p.first, p.second});
  Json doc;
  doc["pairs"] = std::move(pairs);
  doc["lone"] = pairing.lone ? Json(*pairing.lone) : Json(nullptr);
  return doc;
}

Json diagnostics_to_json(const Diagnostics& d) {
  Json doc;
  doc["backend"] = std::string(to_string(d.backend));
  doc["tol"] = d.tol;
  doc["rank_gap_ratio"] = d.rank_gap_ratio;
  doc["min_pair_gap_ratio"] = d.min_pair_gap_ratio;
  doc["min_lone_gap_ratio"] = d.min_lone_gap_ratio;
  doc["low_confidence"] = std::min({d.rank_gap_ratio, d.min_pair_gap_ratio, d.min_lone_gap_ratio}) < kLowConfidenceGap;
  doc["singular_values"] = d.singular_values;
  doc["warnings"] = d.warnings;
  return doc;
}

Json report_to_json(const OrbitReport& r) {
  Json doc;
  doc["n"] = r.n;
  doc["rank"] = r.rank;
  doc["orbit_dimension"] = r.orbit_dimension;
  doc["min_orbit_dimension"] = r.min_orbit_dimension;
  doc["is_minimal"] = r.is_minimal;
  doc["pair_span"] = r.pair_span;
  doc["lone_span"] = r.lone_span;
  doc["pairing"] = r.pairing ? pairing_to_json(*r.pairing) : Json(nullptr);
  doc["diagnostics"] = diagnostics_to_json(r.diagnostics);
  return doc;
}

Json side_matrix_to_json(const SideMatrix& m) {
  Json cols = Json::array();
  for (Eigen::Index c = 0; c < m.columns().cols(); ++c) {
    Json col = Json::array();
    for (Eigen::Index r = 0; r < m.columns().rows(); ++r) col.push_back({m.columns()(r, c).real(), m.columns()(r, c).imag()});
    cols.push_back(std::move(col));
  }
  return cols;
}

Json classification_to_json(const Classification& c) {
  if (c.minimal()) return pairing_to_json(c.pairing());
  Json doc;
  doc["not_minimal"] = true;
  doc["orbit_dimension"] = std::get<NotMinimal>(c.result).orbit_dimension;
  return doc;
}

Json suite_report_to_json(const SuiteReport& r) {
  Json doc;
  doc["suite"] = r.name;
  doc["n"] = r.n;
  doc["trials"] = r.trials;
  doc["checked"] = r.checked;
  doc["passed"] = r.passed();
  doc["skipped"] = r.skipped ? Json(*r.skipped) : Json(nullptr);
  Json cex = Json::array();
  for (const auto& c : r.counterexamples) {
    Json item;
    item["trial"] = c.trial;
    item["detail"] = c.detail;
    item["state"] = c.state ? state_to_json(*c.state) : Json(nullptr);
    cex.push_back(std::move(item));
  }
  doc["counterexamples"] = std::move(cex);
  return doc;
}

namespace {

bool is_scalar(const Json& v) { return !v.is_array() && !v.is_object(); }

void emit(const Json& v, int indent, int depth, std::string& out) {
  switch (v.type()) {
    case Json::value_t::number_float: {
      const double d = v.get<double>();
      if (!std::isfinite(d)) {
        out += "null";
      } else {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.17g", d);
        out += buf;
      }
      return;
    }
    case Json::value_t::array: {
      if (v.empty()) {
        out += "[]";
        return;
      }
      const bool flat = std::all_of(v.begin(), v.end(), [](const Json& e) { return is_scalar(e); });
      if (flat || indent < 0) {
        out += '[';
        bool first = true;
        for (const auto& e : v) {
          if (!first) out += indent < 0 ? "," : ", ";
          first = false;
          emit(e, indent, depth + 1, out);
        }
        out += ']';
        return;
      }
      const std::string pad(static_cast<std::size_t>(indent * (depth + 1)), ' ');
      out += "[\n";
      bool first = true;
      for (const auto& e : v) {
        if (!first) out += ",\n";
        first = false;
        out += pad;
        emit(e, indent, depth + 1, out);
      }
      out += '\n' + std::string(static_cast<std::size_t>(indent * depth), ' ') + ']';
      return;
    }
    case Json::value_t::object: {
      if (v.empty()) {
        out += "{}";
        return;
      }
      const bool pretty = indent >= 0;
      const std::string pad(pretty ? static_cast<std::size_t>(indent * (depth + 1)) : 0, ' ');
      out += pretty ? "{\n" : "{";
      bool first = true;
      for (auto it = v.begin(); it != v.end(); ++it) {
        if (!first) out += pretty ? ",\n" : ",";
        first = false;
        out += pad + Json(it.key()).dump() + (pretty ? ": " : ":");
        emit(it.value(), indent, depth + 1, out);
      }
      if (pretty) out += '\n' + std::string(static_cast<std::size_t>(indent * depth), ' ');
      out += '}';
      return;
    }
    default:
      out += v.dump();
  }
}

}  // namespace

std::string dump_json(const Json& doc, int indent) {
  std::string out;
  emit(doc, indent, 0, out);
  return out;
}

}  // namespace luorbit
