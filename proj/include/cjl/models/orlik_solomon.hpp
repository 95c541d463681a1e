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
#include <vector>

#include "cjl/algebra/linalg.hpp"
#include "cjl/models/cdga.hpp"

namespace cjl {

/// Central arrangement: hyperplane k is {normals.row(k) . x = 0}.
struct Arrangement {
  Matrix normals{Field::rationals(), 0, 0};
};

inline constexpr std::size_t kDefaultArrangementBound = 12;

/// Rejects zero rows, proportional rows and arrangements larger than `bound`.
void validate_arrangement(const Arrangement& arr, std::size_t bound = kDefaultArrangementBound);

/// Minimal dependent subsets of the rows, each sorted, in lex order.
std::vector<std::vector<std::size_t>> circuits(const Arrangement& arr);

/// Betti numbers counted by no-broken-circuit subsets.
std::vector<std::size_t> nbc_betti(const Arrangement& arr);

/// Exterior algebra on the hyperplanes modulo boundaries of circuits. Each
/// graded piece keeps the non-pivot monomials of the row-reduced relation
/// space as its basis. Degrees run from 0 up to the top nonzero piece.
Cdga orlik_solomon(const Arrangement& arr, std::size_t bound = kDefaultArrangementBound);

}  // namespace cjl
