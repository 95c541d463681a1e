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

#include "cjl/algebra/ideal.hpp"
#include "cjl/complexes/poly_matrix.hpp"

namespace cjl {

/// All r x r minors, row subsets then column subsets in lexicographic order.
/// Zero minors are kept so positions stay meaningful.
std::vector<Polynomial> minors(const PolyMatrix& m, int r);

/// I_r(m). r <= 0 gives the unit ideal, r > min(rows, cols) the zero ideal.
Ideal determinantal_ideal(const PolyMatrix& m, int r);

/// I_r(diag(a, b)) as the sum over j of I_j(a) * I_{r-j}(b).
Ideal block_diag_determinantal(const PolyMatrix& a, const PolyMatrix& b, int r);
/// I_r(diag(a, b)) from the minors of the assembled block matrix.
Ideal block_diag_determinantal_direct(const PolyMatrix& a, const PolyMatrix& b, int r);

/// Determinant by the same memoized expansion.
Polynomial determinant(const PolyMatrix& m);

}  // namespace cjl
