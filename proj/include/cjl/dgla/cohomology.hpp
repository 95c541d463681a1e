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

#include <vector>

#include "cjl/dgla/dgla.hpp"

namespace cjl {

/// Cohomology of a finite complex of vector spaces with a fixed splitting:
/// in each degree the representatives are kernel basis vectors (from the
/// reduced echelon form) that extend a basis of the boundaries.
class GradedCohomology {
 public:
  GradedCohomology(const Field& field, const GradedSpace& space, const std::vector<Matrix>& d);

  const GradedSpace& space() const { return h_; }
  /// Representative cocycle of H basis vector k, in the original coordinates.
  const Vector& representative(std::size_t k) const { return reps_.at(k); }
  /// H coordinates of the class of a cocycle. Throws if v is not a cocycle.
  Vector project(const Vector& cocycle) const;
  /// Original-space vector of an H-coordinate vector.
  Vector lift(const Vector& h) const;

 private:
  Field field_;
  GradedSpace original_;
  GradedSpace h_;
  std::vector<Vector> reps_;
  std::vector<std::vector<Vector>> boundaries_;
  std::vector<Matrix> d_;
};

struct CohomologyPair {
  DglaPair pair;
  GradedCohomology lie;
  GradedCohomology module;
};

/// H(C) and H(M) with induced bracket and action and zero differentials.
CohomologyPair cohomology_pair(const DglaPair& p);

/// The DGLA part alone.
struct CohomologyDgla {
  Dgla dgla;
  GradedCohomology data;
};
CohomologyDgla cohomology_dgla(const Dgla& c);

}  // namespace cjl
