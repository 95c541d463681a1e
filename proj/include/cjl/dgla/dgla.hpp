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

#include "cjl/dgla/graded.hpp"

namespace cjl {

/// Finite-dimensional DGLA by structure constants. d[j] maps degree
/// lo + j to lo + j + 1. The bracket table lists [x, y] for basis pairs; pairs
/// not listed bracket to zero.
class Dgla {
 public:
  /// Validates shapes and that [x, y] lands in degree |x| + |y|.
  Dgla(Field field, GradedSpace space, std::vector<Matrix> d, StructureConstants bracket);

  const Field& field() const { return field_; }
  const GradedSpace& space() const { return space_; }
  const std::vector<Matrix>& d() const { return d_; }
  const StructureConstants& bracket_table() const { return bracket_; }
  /// d^i as a matrix (zero outside the window).
  Matrix diff_matrix(int i) const;
  bool has_zero_differential() const;
  bool is_abelian() const { return bracket_.empty(); }

  Vector diff(const Vector& x) const { return apply_graded_linear(space_, d_, x); }
  Elem diff(const Elem& x) const { return apply_graded_linear(space_, d_, x); }
  Vector bracket(const Vector& x, const Vector& y) const;
  Elem bracket(const Elem& x, const Elem& y) const;

 private:
  Field field_;
  GradedSpace space_;
  std::vector<Matrix> d_;
  StructureConstants bracket_;
};

/// DGLA together with a differential graded module.
class DglaPair {
 public:
  DglaPair(Dgla lie, GradedSpace module, std::vector<Matrix> dm, StructureConstants action);

  const Dgla& lie() const { return lie_; }
  const Field& field() const { return lie_.field(); }
  const GradedSpace& module() const { return module_; }
  const std::vector<Matrix>& dm() const { return dm_; }
  const StructureConstants& action_table() const { return action_; }
  Matrix module_diff_matrix(int i) const;
  bool has_zero_differentials() const;

  Vector module_diff(const Vector& m) const { return apply_graded_linear(module_, dm_, m); }
  Elem module_diff(const Elem& m) const { return apply_graded_linear(module_, dm_, m); }
  Vector act(const Vector& c, const Vector& m) const;
  Elem act(const Elem& c, const Elem& m) const;

 private:
  Dgla lie_;
  GradedSpace module_;
  std::vector<Matrix> dm_;
  StructureConstants action_;
};

/// Adds the mirror entry [y, x] = -(-1)^{|x||y|} [x, y] wherever only one
/// order is listed.
StructureConstants complete_skew(const GradedSpace& space, const Field& field, const StructureConstants& sc);

/// Zero matrices for every degree step of the window.
std::vector<Matrix> zero_differentials(const Field& field, const GradedSpace& space);

}  // namespace cjl
