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

#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "cjl/algebra/groebner.hpp"
#include "cjl/algebra/polynomial.hpp"

namespace cjl {

/// Ideal of a RingContext given by generators. The reduced Groebner basis is
/// computed on first use and shared between copies. For a quotient ring
/// S/Q the basis is that of the preimage in S, so it always contains Q.
class Ideal {
 public:
  Ideal(Ring ring, std::vector<Polynomial> generators);
  static Ideal zero(Ring ring);
  static Ideal unit(Ring ring);

  const Ring& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  /// Reduced Groebner basis of the preimage, as polynomials of ring()->base().
  const std::vector<Polynomial>& groebner() const;

  bool is_zero() const;
  bool is_unit() const;
  bool contains(const Polynomial& f) const;
  bool contains(const Ideal& other) const;

  Ideal operator+(const Ideal& other) const;
  Ideal operator*(const Ideal& other) const;

  /// Same ideal seen in ring()->base() (generated by its Groebner basis).
  Ideal preimage() const;
  /// Extension along the identity on variables into a compatible ring.
  Ideal in_ring(const Ring& target) const;
  /// Extension along the ring map x_i -> images[i] (images live in target).
  Ideal mapped(const Ring& target, const std::vector<Polynomial>& images) const;

  /// Groebner basis elements reduced modulo the ring's quotient, zeros
  /// dropped. These are canonical generators inside ring().
  std::vector<Polynomial> canonical_generators() const;
  std::vector<std::string> canonical_strings() const;
  std::string to_string() const;

 private:
  struct Cache {
    std::once_flag once;
    std::vector<Polynomial> basis;
  };

  Ring ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_;
};

bool ideal_membership(const Polynomial& f, const Ideal& ideal);
bool ideal_equal(const Ideal& a, const Ideal& b);
/// f in the radical of `ideal`, by the Rabinowitsch trick.
bool radical_membership(const Polynomial& f, const Ideal& ideal);

/// Monomial ideal of leading monomials of the Groebner basis (preimage).
std::vector<Monomial> leading_monomials(const Ideal& ideal);
Ideal leading_term_ideal(const Ideal& ideal);

/// Krull dimension of the quotient of ring()->base() by the preimage of
/// the ideal; -1 for the unit ideal.
int krull_dimension(const Ideal& ideal);
/// Krull dimension of k[x_0..x_{n-1}]/(monomials): the largest set of
/// variables containing the support of no generator.
int monomial_krull_dimension(const std::vector<Monomial>& generators, std::size_t nvars);

/// Copies f into a ring whose variables extend those of f's ring.
Polynomial embed(const Polynomial& f, const Ring& extended);

}  // namespace cjl
