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
#include <vector>

#include "cjl/algebra/artin.hpp"
#include "cjl/complexes/free_complex.hpp"

namespace cjl {

/// Q[t]/(t^n).
ArtinLocalAlgebra truncated_line(int n);
/// Q[x,y]/(x^2, xy, y^2).
ArtinLocalAlgebra fat_point();

/// Random element of A with small integer coordinates.
Polynomial random_algebra_element(const ArtinLocalAlgebra& a, std::mt19937_64& rng, bool in_max_ideal);

/// Direct sum of random one- and two-term pieces (zero, unit or m-valued
/// maps) with ranks <= 4 on a window of length <= 4, then conjugated by
/// random unipotent changes of basis.
FreeComplex random_complex(const ArtinLocalAlgebra& a, std::mt19937_64& rng);

/// g_{i+1} d^i g_i^{-1} for random unipotent upper triangular g_i.
FreeComplex conjugate_randomly(const ArtinLocalAlgebra& a, const FreeComplex& e, std::mt19937_64& rng);

/// e plus one or two trivial complexes A -u-> A (u a random unit) at
/// random degrees around the window, then conjugated.
FreeComplex pad_randomly(const ArtinLocalAlgebra& a, const FreeComplex& e, std::mt19937_64& rng);

/// The acceptance corpus: `count` complexes alternating between the two
/// algebras.
struct CorpusEntry {
  ArtinLocalAlgebra algebra;
  FreeComplex complex;
};
std::vector<CorpusEntry> complex_corpus(std::size_t count, std::uint64_t seed);

}  // namespace cjl
