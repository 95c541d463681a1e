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

#include "cjl/algebra/field.hpp"
#include "cjl/geometry/verdict.hpp"

namespace cjl {

/// Truncated power series c_0 + c_1 t + ... + c_bound t^bound.
struct ChernSeries {
  int i = 0;
  std::vector<Rational> coeffs;
};

/// Exponent of (1 - k t) in the product for c_t^{(i)}: (-1)^k b_{i+1-k}.
/// `b` is indexed by degree from 0; missing degrees count as 0.
long chern_exponent(const std::vector<long>& b, int i, int k);

/// prod_{k=1}^{i+1} (1 - k t)^{chern_exponent(b, i, k)} up to t^bound.
ChernSeries chern_series(const std::vector<long>& b, int i, std::size_t bound);
/// Same series through the logarithmic derivative recurrence.
ChernSeries chern_series_logderiv(const std::vector<long>& b, int i, std::size_t bound);

/// b_a - b_{a-1} + b_{a-2} - ...
long euler_chi(const std::vector<long>& b, int a);

/// chern_series to degree q - 1 after checking the non-vanishing of
/// euler_chi(b, a); throws ValidationError when it vanishes.
ChernSeries gated_chern_series(const std::vector<long>& b, int i, int a, long q);

/// Partitions of `weight`, parts in non-increasing order, listed in
/// lexicographic order.
std::vector<std::vector<int>> partitions(int weight);

/// Jacobi-Trudi determinant det(c_{lambda_r - r + s}) with c_0 = 1 and
/// c_j = 0 for j < 0.
Rational schur_value(const ChernSeries& cs, const std::vector<int>& lambda);

/// One verdict per partition of each weight 1..q-1 (value >= 0).
std::vector<Verdict> schur_nonnegativity(const ChernSeries& cs, long q);

}  // namespace cjl
