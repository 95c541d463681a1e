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

#include <cstddef>

#include "cjl/dgla/dgla.hpp"
#include "cjl/models/cdga.hpp"

namespace cjl {

/// Lambda(e1..en) tensor gl_r acting on Lambda tensor Mat_{r x r}; r = 1 is
/// the abelian pair (A, A).
DglaPair exterior_pair(std::size_t n, std::size_t r = 1);

/// Rank-one abelian pair on the cohomology of the genus-g surface.
DglaPair surface_pair(std::size_t g);

/// Small pair with a nonzero differential and a non-abelian bracket:
/// A = span{1, s} + span{u} in degree 1 with ds = u and all products of
/// s, u zero, tensored with aff(1) = <x, y | [x, y] = y> acting on Q^2.
DglaPair nonabelian_fixture();

/// The cdga A of nonabelian_fixture.
Cdga dual_numbers_cdga();

}  // namespace cjl
