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

#include <random>

#include "cjl/algebra/artin.hpp"
#include "cjl/dgla/dgla.hpp"

namespace cjl {

/// Elements of C tensor A and M tensor A are Elem vectors over a.ring(),
/// indexed by the global basis of C or M.

/// d(omega) + 1/2 [omega, omega].
Elem maurer_cartan_expression(const Dgla& c, const Elem& omega);

/// Throws ValidationError unless omega is supported in degree 1 with
/// coefficients in m.
void check_mc_shape(const Dgla& c, const ArtinLocalAlgebra& a, const Elem& omega);
/// Throws ValidationError unless lambda is supported in degree 0 with
/// coefficients in m.
void check_gauge_shape(const Dgla& c, const ArtinLocalAlgebra& a, const Elem& lambda);

bool maurer_cartan_check(const Dgla& c, const ArtinLocalAlgebra& a, const Elem& omega);

/// exp(ad lambda) x, truncated where the terms vanish.
Elem exp_ad(const Dgla& c, const ArtinLocalAlgebra& a, const Elem& lambda, const Elem& x);
/// ((1 - exp(ad lambda)) / ad lambda) x.
Elem one_minus_exp_over_ad(const Dgla& c, const ArtinLocalAlgebra& a, const Elem& lambda, const Elem& x);

/// exp(ad lambda) omega + ((1 - exp(ad lambda)) / ad lambda)(d lambda).
Elem gauge_act(const Dgla& c, const ArtinLocalAlgebra& a, const Elem& lambda, const Elem& omega);

/// exp(lambda) xi = sum_n lambda^n xi / n!.
Elem module_transport(const DglaPair& p, const ArtinLocalAlgebra& a, const Elem& lambda, const Elem& xi);

struct IdentitySides {
  Elem lhs;
  Elem rhs;
  bool holds() const { return lhs == rhs; }
};
/// exp(lambda)(omega xi) against (exp(ad lambda) omega) exp(lambda) xi.
IdentitySides transport_product_identity(const DglaPair& p, const ArtinLocalAlgebra& a, const Elem& lambda,
                                         const Elem& omega, const Elem& xi);
/// exp(lambda) d xi against d(exp(lambda) xi) + (((1 - e^{ad lambda}) / ad lambda) d lambda) exp(lambda) xi.
IdentitySides transport_differential_identity(const DglaPair& p, const ArtinLocalAlgebra& a, const Elem& lambda,
                                              const Elem& xi);

/// Random element of V tensor m supported in `degree` (global indexing of
/// `space`), coefficients small integers.
Elem random_elem(const GradedSpace& space, int degree, const ArtinLocalAlgebra& a, std::mt19937_64& rng,
                 int min_power = 1);
/// Random element of m^k.
Polynomial random_power_element(const ArtinLocalAlgebra& a, int k, std::mt19937_64& rng);

/// Random Maurer-Cartan element: a cocycle times an element of m deep
/// enough to kill the bracket, moved by a random gauge transformation.
Elem sample_mc(const Dgla& c, const ArtinLocalAlgebra& a, std::mt19937_64& rng);

/// Over A with m^2 = 0 the MC equation is linear: a basis of Z^1(C) tensor m.
std::vector<Elem> square_zero_mc_basis(const Dgla& c, const ArtinLocalAlgebra& a);

}  // namespace cjl
