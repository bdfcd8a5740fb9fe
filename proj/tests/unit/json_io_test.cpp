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

#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "luorbit/errors.hpp"
#include "luorbit/json_io.hpp"

namespace luorbit {
namespace {

TEST(JsonIo, FloatRoundTripIsBitExact) {
  auto psi = random_state(3, 8);
  auto back = parse_state(dump_json(state_to_json(psi)));
  ASSERT_EQ(back.qubits(), 3);
  for (Code c = 0; c < psi.dimension(); ++c) {
    // A second normalization may move the last ulp.
    EXPECT_NEAR(std::abs(back[c] - psi[c]), 0.0, 1e-15);
  }
}

TEST(JsonIo, ExactRoundTrip) {
  auto psi = StateVector::from_exact({GaussianRational(mpq_class(1, 2), 3), GaussianRational(-2), GaussianRational(0),
                                      GaussianRational(mpq_class(0), mpq_class(-7, 3))});
  auto doc = state_to_json(psi);
  EXPECT_EQ(doc["mode"], "exact");
  EXPECT_EQ(doc["amplitudes"][0][0], "1/2");
  auto back = state_from_json(doc);
  ASSERT_TRUE(back.is_exact());
  for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(back.exact_amplitudes()[i], psi.exact_amplitudes()[i]);
}

TEST(JsonIo, AcceptsIntegersAndDecimalsInExactMode) {
  auto psi = parse_state(R"({"n":1,"mode":"exact","amplitudes":[[1,0],["0.5","-1/4"]]})");
  EXPECT_EQ(psi.exact_amplitudes()[1], GaussianRational(mpq_class(1, 2), mpq_class(-1, 4)));
}

TEST(JsonIo, SchemaErrors) {
  EXPECT_THROW(parse_state("{"), ParseError);
  EXPECT_THROW(parse_state("[]"), ParseError);
  EXPECT_THROW(parse_state(R"({"n":2,"mode":"float","amplitudes":[[1,0],[0,0]]})"), ParseError);
  EXPECT_THROW(parse_state(R"({"n":1,"mode":"fuzzy","amplitudes":[[1,0],[0,0]]})"), ParseError);
  EXPECT_THROW(parse_state(R"({"n":1,"mode":"float","amplitudes":[[1],[0,0]]})"), ParseError);
  EXPECT_THROW(parse_state(R"({"n":1,"mode":"exact","amplitudes":[["a",0],[0,0]]})"), ParseError);
  EXPECT_THROW(parse_state(R"({"n":1,"mode":"float","amplitudes":[[0,0],[0,0]]})"), ZeroVectorError);
}

TEST(JsonIo, DumpFormatting) {
  Json doc = Json::object();
  doc["x"] = 0.1;
  doc["inf"] = std::numeric_limits<double>::infinity();
  doc["v"] = Json::array({1, 2});
  EXPECT_EQ(dump_json(doc, -1), R"({"x":0.10000000000000001,"inf":null,"v":[1,2]})");
  EXPECT_EQ(dump_json(doc), "{\n  \"x\": 0.10000000000000001,\n  \"inf\": null,\n  \"v\": [1, 2]\n}");
}

TEST(JsonIo, ReportFields) {
  auto doc = report_to_json(analyze(singlet_product(3, {{1, 3}}, 2)));
  for (const char* key : {"n", "rank", "orbit_dimension", "min_orbit_dimension", "is_minimal", "pair_span", "lone_span",
                          "pairing", "diagnostics"}) {
    EXPECT_TRUE(doc.contains(key)) << key;
  }
  EXPECT_EQ(doc["pairing"]["pairs"], Json::parse("[[1,3]]"));
  EXPECT_EQ(doc["pairing"]["lone"], 2);
  EXPECT_TRUE(doc["diagnostics"].contains("low_confidence"));

  auto ghz = report_to_json(analyze(ghz_state(3)));
  EXPECT_TRUE(ghz["pairing"].is_null());
}

TEST(JsonIo, Classification) {
  auto w = classification_to_json(classify_min_orbit(w_state(3)));
  EXPECT_EQ(dump_json(w, -1), R"({"not_minimal":true,"orbit_dimension":8})");
  auto p = classification_to_json(classify_min_orbit(singlet_product(4, {{1, 2}, {3, 4}}, std::nullopt)));
  EXPECT_EQ(p["pairs"], Json::parse("[[1,2],[3,4]]"));
  EXPECT_TRUE(p["lone"].is_null());
}

TEST(JsonIo, SideMatrixDump) {
  auto doc = side_matrix_to_json(SideMatrix(basis_state(1, MultiIndex(1, 0))));
  ASSERT_EQ(doc.size(), 4u);
  EXPECT_EQ(doc[0], Json::parse("[[0,1],[0,0]]"));
  EXPECT_EQ(doc[1], Json::parse("[[0,0],[-1,0]]"));
  EXPECT_EQ(doc[3], Json::parse("[[0,-1],[0,0]]"));
}

}  // namespace
}  // namespace luorbit
