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
#include <optional>
#include <string>
#include <vector>

#include "cjl/algebra/field.hpp"
#include "cjl/algebra/monomial.hpp"

namespace cjl {

class Polynomial;
class RingContext;
using Ring = std::shared_ptr<const RingContext>;

/// Coefficient ring: a polynomial ring over a Field, optionally modulo an
/// ideal. A quotient context carries the reduced Groebner basis of its
/// defining ideal; every polynomial living in it is kept in normal form, so
/// representatives are canonical.
class RingContext : public std::enable_shared_from_this<RingContext> {
 public:
  static Ring make(Field field, std::vector<std::string> variables,
                   MonomialOrder order = MonomialOrder::DegRevLex);
  /// Names x0..x{n-1}.
  static Ring make(Field field, std::size_t nvars, MonomialOrder order = MonomialOrder::DegRevLex);
  /// `relations` may live in `base` or in any context with the same
  /// variables; they are moved to the quotient-free base before the
  /// Groebner basis is taken.
  static Ring quotient(const Ring& base, const std::vector<Polynomial>& relations);

  const Field& field() const { return field_; }
  std::size_t nvars() const { return vars_.size(); }
  const std::vector<std::string>& variables() const { return vars_; }
  MonomialOrder order() const { return order_; }

  bool has_quotient() const { return base_ != nullptr; }
  /// The quotient-free ring on the same variables (this ring when no quotient).
  Ring base() const;
  /// Reduced Groebner basis of the defining ideal, as polynomials of base().
  const std::vector<Polynomial>& quotient_basis() const { return quotient_gb_; }
  /// True when the quotient is the whole ring (zero ring).
  bool is_zero_ring() const;

  std::optional<std::size_t> index_of(const std::string& name) const;
  /// Quotient-free ring with `extra` variables appended.
  Ring extended(const std::vector<std::string>& extra) const;

  /// Structural equality: field, variables, order and quotient.
  bool same_as(const RingContext& other) const;
  /// Same field, variable count and order (polynomials can be re-homed).
  bool compatible_with(const RingContext& other) const;

  std::string describe() const;

 private:
  RingContext(Field field, std::vector<std::string> vars, MonomialOrder order);

  Field field_;
  std::vector<std::string> vars_;
  MonomialOrder order_;
  Ring base_;
  std::vector<Polynomial> quotient_gb_;
};

bool same_ring(const Ring& a, const Ring& b);

struct Term {
  Monomial mono;
  Rational coef;
};

/// Sparse polynomial, terms sorted strictly descending in the ring's order,
/// no zero coefficients, normal form modulo the ring's quotient.
class Polynomial {
 public:
  explicit Polynomial(Ring ring);

  static Polynomial constant(Ring ring, const Rational& c);
  static Polynomial variable(Ring ring, std::size_t index);
  static Polynomial monomial(Ring ring, const Monomial& m, const Rational& c = 1);
  /// Sorts, merges, normalizes coefficients and reduces modulo the quotient.
  static Polynomial from_terms(Ring ring, std::vector<Term> terms);
  /// No normalization at all: caller guarantees the class invariants.
  static Polynomial unchecked(Ring ring, std::vector<Term> terms);

  const Ring& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  const Term& leading() const { return terms_.front(); }
  const Monomial& lm() const { return terms_.front().mono; }
  const Rational& lc() const { return terms_.front().coef; }
  Rational constant_term() const;
  Rational coefficient(const Monomial& m) const;
  int total_degree() const;
  bool is_homogeneous() const;

  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial operator-() const;
  Polynomial operator*(const Rational& c) const;
  Polynomial& operator+=(const Polynomial& other) { return *this = *this + other; }
  Polynomial& operator-=(const Polynomial& other) { return *this = *this - other; }
  Polynomial& operator*=(const Polynomial& other) { return *this = *this * other; }

  /// c * m * this, then reduced if the ring has a quotient.
  Polynomial mul_term(const Monomial& m, const Rational& c) const;
  Polynomial pow(unsigned exponent) const;
  Polynomial monic() const;

  /// Same terms in a compatible ring (reduced there if it has a quotient).
  Polynomial in_ring(const Ring& target) const;
  Rational evaluate(const std::vector<Rational>& point) const;
  /// Ring map: variable i goes to images[i]; all images live in `target`.
  Polynomial substitute(const Ring& target, const std::vector<Polynomial>& images) const;

  std::string to_string() const;

  bool operator==(const Polynomial& other) const;
  bool operator!=(const Polynomial& other) const { return !(*this == other); }

 private:
  Polynomial(Ring ring, std::vector<Term> terms) : ring_(std::move(ring)), terms_(std::move(terms)) {}

  Ring ring_;
  std::vector<Term> terms_;
};

/// Total order on polynomials of one ring (by terms), for deterministic sorting.
int compare(const Polynomial& a, const Polynomial& b);

/// Merges `a - c*m*b` on raw sorted term lists.
std::vector<Term> sub_scaled(const Field& field, MonomialOrder order, const std::vector<Term>& a,
                             const Rational& c, const Monomial& m, const std::vector<Term>& b);

}  // namespace cjl
