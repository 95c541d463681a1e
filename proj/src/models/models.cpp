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

#include "cjl/models/models.hpp"

#include "cjl/algebra/errors.hpp"

namespace cjl {

DglaPair exterior_pair(std::size_t n, std::size_t r) {
  if (n == 0) throw ValidationError("exterior_pair needs n >= 1");
  return cdga_to_pair(exterior_algebra(n), r, r);
}

DglaPair surface_pair(std::size_t g) { return cdga_to_pair(surface_algebra(g), 1, 1); }

Cdga dual_numbers_cdga() {
  const Field f = Field::rationals();
  Cdga a;
  a.field = f;
  a.space = GradedSpace(0, {2, 1}, {"1", "s", "u"});
  a.mult[{0, 0}] = {{0, Rational(1)}};
  a.mult[{0, 1}] = {{1, Rational(1)}};
  a.mult[{1, 0}] = {{1, Rational(1)}};
  a.mult[{0, 2}] = {{2, Rational(1)}};
  a.mult[{2, 0}] = {{2, Rational(1)}};
  Matrix d(f, 1, 2);
  d(0, 1) = 1;
  a.d = {d};
  return a;
}

DglaPair nonabelian_fixture() {
  const Field f = Field::rationals();
  LieAlgebra g;
  g.dim = 2;
  g.labels = {"x", "y"};
  g.bracket[{0, 1}] = {{1, Rational(1)}};
  g.bracket[{1, 0}] = {{1, Rational(-1)}};
  Representation v;
  v.dim = 2;
  v.labels = {"v1", "v2"};
  Matrix x(f, 2, 2), y(f, 2, 2);
  x(0, 0) = 1;
  y(0, 1) = 1;
  v.rho = {x, y};
  return tensor_pair(dual_numbers_cdga(), g, v);
}

}  // namespace cjl
