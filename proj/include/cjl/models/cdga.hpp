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

#include "cjl/dgla/checks.hpp"
#include "cjl/dgla/dgla.hpp"

namespace cjl {

/// Graded commutative algebra by structure constants, global basis index 0
/// is the unit. The differential is optional (zero when empty).
struct Cdga {
  Field field = Field::rationals();
  GradedSpace space;
  StructureConstants mult;
  std::vector<Matrix> d;

  Vector multiply(const Vector& a, const Vector& b) const;
  std::vector<std::size_t> betti() const;
};

/// Unit, graded commutativity, associativity, d^2 = 0 and Leibniz.
AxiomReport check_cdga(const Cdga& a);

/// Exterior algebra on n generators e1..en of degree 1.
Cdga exterior_algebra(std::size_t n, Field field = Field::rationals());
/// Cohomology ring of the closed orientable surface of genus g.
Cdga surface_algebra(std::size_t g, Field field = Field::rationals());

/// Finite-dimensional Lie algebra in degree 0.
struct LieAlgebra {
  std::size_t dim = 0;
  StructureConstants bracket;
  std::vector<std::string> labels;
};
/// Representation by matrices rho(x) for each basis vector x.
struct Representation {
  std::size_t dim = 0;
  std::vector<Matrix> rho;
  std::vector<std::string> labels;
};

LieAlgebra gl_algebra(std::size_t r, Field field = Field::rationals());
/// Mat_{r x s} with gl_r acting by left multiplication.
Representation matrix_module(std::size_t r, std::size_t s, Field field = Field::rationals());

/// C = A tensor g, M = A tensor V, [a x, b y] = ab [x, y], (a x)(b v) = ab x v,
/// d(a x) = (da) x.
DglaPair tensor_pair(const Cdga& a, const LieAlgebra& g, const Representation& v);

/// A tensor gl_r acting on A tensor Mat_{r x s}.
DglaPair cdga_to_pair(const Cdga& a, std::size_t r, std::size_t s);

}  // namespace cjl
