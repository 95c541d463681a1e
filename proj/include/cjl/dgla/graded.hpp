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
#include <string>
#include <utility>
#include <vector>

#include "cjl/algebra/linalg.hpp"
#include "cjl/algebra/polynomial.hpp"

namespace cjl {

/// Finite graded vector space on the degree window [lo, lo + dims.size() - 1].
/// Basis vectors carry global indices: degree lo first, then lo + 1, ...
class GradedSpace {
 public:
  GradedSpace() = default;
  GradedSpace(int lo, std::vector<std::size_t> dims, std::vector<std::string> labels = {});

  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(dims_.size()) - 1; }
  std::size_t dim(int degree) const;
  const std::vector<std::size_t>& dims() const { return dims_; }
  std::size_t offset(int degree) const;
  std::size_t total() const { return total_; }
  std::size_t global(int degree, std::size_t local) const;
  int degree_of(std::size_t global) const;
  std::size_t local_of(std::size_t global) const { return global - offset(degree_of(global)); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(std::size_t global) const { return labels_.at(global); }
  bool operator==(const GradedSpace& other) const { return lo_ == other.lo_ && dims_ == other.dims_; }

 private:
  int lo_ = 0;
  std::vector<std::size_t> dims_{0};
  std::vector<std::string> labels_;
  std::vector<std::size_t> offsets_{0};
  std::size_t total_ = 0;
};

/// Sparse vector by global index, sorted, no zero entries.
using SparseVec = std::vector<std::pair<std::size_t, Rational>>;
/// Bilinear structure constants: (x, y) -> product of basis vectors x, y.
using StructureConstants = std::map<std::pair<std::size_t, std::size_t>, SparseVec>;

SparseVec make_sparse(const Vector& dense);
Vector make_dense(const SparseVec& sparse, std::size_t size);

/// Element of V tensor R for a coefficient ring R (R = A or a field ring),
/// one coefficient per global basis index.
using Elem = std::vector<Polynomial>;

Elem zero_elem(const Ring& ring, std::size_t size);
Elem elem_add(const Elem& a, const Elem& b);
Elem elem_sub(const Elem& a, const Elem& b);
Elem elem_scale(const Elem& a, const Polynomial& c);
Elem elem_scale(const Elem& a, const Rational& c);
bool elem_is_zero(const Elem& a);
/// Constant coefficients embedded in `ring`.
Elem elem_from_vector(const Ring& ring, const Vector& v);

Elem apply_bilinear(const StructureConstants& sc, const Elem& a, const Elem& b, std::size_t out_size);
Vector apply_bilinear(const Field& field, const StructureConstants& sc, const Vector& a, const Vector& b,
                      std::size_t out_size);

/// Block matrix d on the global basis, from per-degree matrices.
/// mats[j] maps degree lo + j to lo + j + 1.
Elem apply_graded_linear(const GradedSpace& space, const std::vector<Matrix>& mats, const Elem& a);
Vector apply_graded_linear(const GradedSpace& space, const std::vector<Matrix>& mats, const Vector& a);

}  // namespace cjl
