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
#include <optional>

#include "cjl/algebra/artin.hpp"
#include "cjl/complexes/free_complex.hpp"

namespace cjl {

/// Chain map source -> target; components[i] has shape
/// rank_target(i) x rank_source(i). Missing degrees are zero.
class ComplexMap {
 public:
  /// Throws ValidationError on shape errors or when g d != d g.
  ComplexMap(FreeComplex source, FreeComplex target, std::map<int, PolyMatrix> components);
  static ComplexMap identity(const FreeComplex& e);

  const FreeComplex& source() const { return source_; }
  const FreeComplex& target() const { return target_; }
  PolyMatrix component(int i) const;

 private:
  FreeComplex source_;
  FreeComplex target_;
  std::map<int, PolyMatrix> components_;
};

/// Matrix of an A-linear map between free A-modules as a map of
/// k-vector spaces (each entry becomes a dim(A) x dim(A) block).
Matrix flatten(const ArtinLocalAlgebra& a, const PolyMatrix& m);

/// H^i(g) is an isomorphism for i <= q and injective for i = q + 1;
/// q = nullopt means every degree. Cohomology is taken over the base field
/// after flattening along `a`.
bool is_q_equivalence(const ArtinLocalAlgebra& a, const ComplexMap& g, std::optional<int> q);

/// Cohomology dimensions over the base field after flattening.
std::size_t flat_cohomology_rank(const ArtinLocalAlgebra& a, const FreeComplex& e, int i);

}  // namespace cjl
