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
#include <vector>

#include "cjl/complexes/poly_matrix.hpp"

namespace cjl {

/// Bounded complex F^lo -> ... -> F^hi of free modules over `ring`.
/// diffs[j] is d^{lo+j} : F^{lo+j} -> F^{lo+j+1}, of shape
/// ranks[j+1] x ranks[j]; there are hi - lo of them.
class FreeComplex {
 public:
  /// Validates shapes and d o d = 0; throws ValidationError otherwise.
  FreeComplex(Ring ring, int lo, std::vector<std::size_t> ranks, std::vector<PolyMatrix> diffs);
  static FreeComplex zero(Ring ring, int lo = 0, int hi = 0);

  const Ring& ring() const { return ring_; }
  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(ranks_.size()) - 1; }
  const std::vector<std::size_t>& ranks() const { return ranks_; }
  std::size_t rank(int i) const;
  /// d^i, a zero matrix of the right shape outside the window.
  PolyMatrix diff(int i) const;
  const std::vector<PolyMatrix>& diffs() const { return diffs_; }

  /// Direct sum, over the union of the two windows.
  FreeComplex operator+(const FreeComplex& other) const;
  /// Same complex on the window [lo, hi] (must contain the current one).
  FreeComplex widened(int lo, int hi) const;
  /// Entry-wise image under a ring map.
  FreeComplex mapped(const Ring& target, const std::vector<Polynomial>& images) const;
  FreeComplex in_ring(const Ring& target) const;

 private:
  Ring ring_;
  int lo_;
  std::vector<std::size_t> ranks_;
  std::vector<PolyMatrix> diffs_;
};

/// The trivial complex R --u--> R placed in degrees i, i+1.
FreeComplex trivial_complex(const Ring& ring, int i, const Polynomial& unit);

/// Entry-wise check of d^{i+1} d^i = 0. On failure the offending i is
/// stored in *failing_degree.
bool squares_to_zero(const FreeComplex& e, int* failing_degree = nullptr);

}  // namespace cjl
