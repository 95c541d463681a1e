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

#include "cjl/algebra/ideal.hpp"
#include "cjl/complexes/free_complex.hpp"
#include "cjl/dgla/cohomology.hpp"

namespace cjl {

/// S = k[x0..x{h-1}] on the dual basis of H^1(C) and the ideal I_Q of the
/// coordinates of [eta, eta], eta = sum x_a h_a.
struct QuadraticCone {
  Ring s;
  Ideal ideal;
  /// S / I_Q (equal to S when I_Q = 0).
  Ring quotient;
};
QuadraticCone quadratic_cone_ideal(const Dgla& c);

/// Ideal of d(omega) + 1/2 [omega, omega] = 0 on the dual basis of C^1.
struct FlatConnections {
  Ring ring;
  Ideal ideal;
};
FlatConnections flat_connection_ideal(const Dgla& c);

/// H(M) tensor S with differential given by the tautological element.
struct UniversalAomoto {
  QuadraticCone cone;
  /// The cohomology pair the complex is built from.
  DglaPair pair;
  /// phi[j] : H^{lo+j}(M) tensor S -> H^{lo+j+1}(M) tensor S over S (linear entries).
  std::vector<PolyMatrix> phi;
  /// The same differentials over S / I_Q.
  FreeComplex complex;

  int lo() const { return complex.lo(); }
  int hi() const { return complex.hi(); }
  /// b_i = dim H^i(M).
  std::size_t betti(int i) const { return complex.rank(i); }
  /// phi_i over S (zero matrix outside the window).
  PolyMatrix phi_at(int i) const;
};
UniversalAomoto universal_aomoto(const DglaPair& p);

/// J^i_k of the universal complex over S / I_Q, returned as its preimage in S.
Ideal resonance_ideal(const UniversalAomoto& u, int i, int k);
Ideal resonance_ideal(const DglaPair& p, int i, int k);

/// Does eta satisfy the cone equations?
bool in_quadratic_cone(const UniversalAomoto& u, const Vector& eta);
/// dim H^i(H(M), eta .); throws ValidationError when eta is not in the cone.
std::size_t pointwise_resonance(const UniversalAomoto& u, const Vector& eta, int i);
std::size_t pointwise_resonance(const DglaPair& p, const Vector& eta, int i);

}  // namespace cjl
