// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <vector>

#include "cjl/algebra/ideal.hpp"
#include "cjl/algebra/parse.hpp"
#include "cjl/algebra/polynomial.hpp"

namespace cjl::test {

inline Ring qring(std::vector<std::string> vars, MonomialOrder order = MonomialOrder::DegRevLex) {
  return RingContext::make(Field::rationals(), std::move(vars), order);
}

inline Polynomial P(const Ring& r, const std::string& text) { return parse_polynomial(r, text); }

inline Ideal I(const Ring& r, const std::vector<std::string>& gens) { return Ideal(r, parse_polynomials(r, gens)); }

inline std::vector<std::string> strings(const std::vector<Polynomial>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

}  // namespace cjl::test
