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

#include "luorbit/gaussian_rational.hpp"

#include <stdexcept>

namespace luorbit {

std::string rational_to_string(const mpq_class& q) {
  mpq_class c(q);
  c.canonicalize();
  return c.get_str();
}

mpq_class parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational");
  const auto dot = s.find('.');
  if (dot != std::string::npos) {
    // Terminating decimal: shift into an integer over a power of ten.
    if (s.find_first_of("/eE") != std::string::npos) {
      throw std::invalid_argument("unsupported rational literal: " + s);
    }
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    const auto scale = s.size() - dot - 1;
    mpz_class num;
    if (digits == "-" || digits == "+" || num.set_str(digits, 10) != 0) {
      throw std::invalid_argument("malformed rational: " + s);
    }
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, scale);
    mpq_class q(num, den);
    q.canonicalize();
    return q;
  }
  if (s.front() == '+') s.erase(0, 1);
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational: " + std::string(text));
  if (sgn(q.get_den()) == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
  q.canonicalize();
  return q;
}

}  // namespace luorbit
