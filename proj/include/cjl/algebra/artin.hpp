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

#include "cjl/algebra/ideal.hpp"
#include "cjl/algebra/linalg.hpp"

namespace cjl {

/// Finite-dimensional local algebra k[x]/I with maximal ideal (x). Elements
/// are polynomials of the quotient ring (canonical normal forms); the
/// standard monomials give a basis with the unit first.
class ArtinLocalAlgebra {
 public:
  const Ring& ring() const { return ring_; }
  const Field& field() const { return ring_->field(); }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Monomial>& basis() const { return basis_; }
  const std::vector<std::string>& labels() const { return labels_; }
  /// c[i][j][k] with e_i e_j = sum_k c[i][j][k] e_k.
  const std::vector<std::vector<Vector>>& mult_table() const { return table_; }
  /// Indices 1..dim-1: the non-constant standard monomials.
  std::vector<std::size_t> max_ideal_basis() const;
  /// Least s with m^s = 0.
  int nilpotency_index() const { return nilpotency_; }

  Polynomial basis_element(std::size_t i) const;
  Vector coordinates(const Polynomial& a) const;
  Polynomial element(const Vector& coords) const;
  Polynomial one() const { return Polynomial::constant(ring_, 1); }
  Polynomial zero() const { return Polynomial(ring_); }

  Rational residue(const Polynomial& a) const { return a.constant_term(); }
  bool in_max_ideal(const Polynomial& a) const { return a.constant_term() == 0; }
  bool is_unit(const Polynomial& a) const { return !in_max_ideal(a); }
  Polynomial inverse(const Polynomial& a) const;
  Ideal max_ideal() const;
  /// Dimension of m^k as a vector space.
  std::size_t power_dim(int k) const;

 private:
  friend ArtinLocalAlgebra make_artin(const Ring& quotient_ring);
  ArtinLocalAlgebra() = default;

  Ring ring_;
  std::vector<Monomial> basis_;
  std::vector<std::string> labels_;
  std::vector<std::vector<Vector>> table_;
  std::vector<std::size_t> power_dims_;
  int nilpotency_ = 1;
};

/// Builds ring/(relations). Throws ValidationError when the quotient is not
/// finite-dimensional or not local at the origin.
ArtinLocalAlgebra make_artin(const Ring& ring, const std::vector<Polynomial>& relations);
/// `ring` already carries the quotient.
ArtinLocalAlgebra make_artin(const Ring& quotient_ring);

}  // namespace cjl
