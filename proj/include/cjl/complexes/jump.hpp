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

#include <map>
#include <utility>
#include <vector>

#include "cjl/algebra/artin.hpp"
#include "cjl/complexes/determinantal.hpp"
#include "cjl/complexes/free_complex.hpp"

namespace cjl {

/// J^i_k(E) = I_{rank F^i - k + 1}(d^{i-1} + d^i), computed on E as given.
/// Throws ValidationError for k <= 0.
Ideal jump_ideal(const FreeComplex& e, int i, int k);
/// Same, after minimizing E over the Artinian algebra.
Ideal jump_ideal(const ArtinLocalAlgebra& a, const FreeComplex& e, int i, int k);

using JumpIdealTable = std::map<std::pair<int, int>, Ideal>;
/// J^i_k for every degree of the window and 1 <= k <= kmax.
JumpIdealTable jump_table(const FreeComplex& e, int kmax);

/// Splits off trivial summands at unit pivots until every differential
/// has all entries in the maximal ideal.
FreeComplex minimize_complex(const ArtinLocalAlgebra& a, const FreeComplex& e);

/// Ring homomorphism given by the images of the source variables.
struct RingMap {
  Ring source;
  Ring target;
  std::vector<Polynomial> images;

  static RingMap identity(const Ring& ring);
  /// Source variables go to the same variables of a compatible target.
  static RingMap projection(const Ring& source, const Ring& target);
  /// Onto the residue field k = A/m, a ring with no variables.
  static RingMap residue(const Ring& source);

  Polynomial operator()(const Polynomial& f) const;
  /// Throws ValidationError when a defining relation of the source does
  /// not map to zero.
  void check_well_defined() const;
};

FreeComplex base_change(const FreeComplex& e, const RingMap& phi);
/// Extension of an ideal along phi.
Ideal extend_ideal(const Ideal& ideal, const RingMap& phi);

/// dim H^i(E tensor A/m) over the residue field.
std::size_t fiber_cohomology_rank(const ArtinLocalAlgebra& a, const FreeComplex& e, int i);

/// dim H^i of a complex of vector spaces given by constant matrices.
std::size_t cohomology_rank(const std::vector<std::size_t>& ranks, const std::vector<Matrix>& diffs, int lo, int i);

}  // namespace cjl
