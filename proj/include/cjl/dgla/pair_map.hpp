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

#include "cjl/dgla/dgla.hpp"

namespace cjl {

/// Map of DGLA pairs on global bases: g1 : C -> C', g2 : M -> M'.
struct PairMap {
  DglaPair source;
  DglaPair target;
  Matrix g1;
  Matrix g2;
};

/// Throws ValidationError with a witness unless g preserves degrees and
/// commutes with differentials, bracket and action.
void check_pair_map(const PairMap& g);

struct EquivalenceVerdict {
  bool holds = false;
  std::string witness;
};

/// H(g1) iso in degrees <= 1 and injective in degree 2; H(g2) iso in
/// degrees <= i and injective in degree i + 1.
EquivalenceVerdict pair_map_equivalence(const PairMap& g, int i);

/// Product of two pairs (no cross brackets or actions) with the inclusion
/// of the first factor.
PairMap include_into_sum(const DglaPair& p, const DglaPair& q);

/// The pair (k -> k, k -> k) with identity differentials in degrees
/// `degree`, `degree + 1` and zero bracket and action.
DglaPair acyclic_pair(const Field& field, int degree);

/// Projection of a sum onto its first factor, left inverse of include_into_sum.
PairMap project_from_sum(const DglaPair& p, const DglaPair& q);

}  // namespace cjl
