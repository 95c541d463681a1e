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

#include "cjl/algebra/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "cjl/algebra/errors.hpp"
#include "cjl/algebra/groebner.hpp"

namespace cjl {

namespace {

void require_same(const Ring& a, const Ring& b) {
  if (!same_ring(a, b)) throw RingMismatch(a->describe() + " vs " + b->describe());
}

std::vector<Term> reduce_if_quotient(const RingContext& ring, std::vector<Term> terms) {
  if (!ring.has_quotient() || terms.empty()) return terms;
  return reduce_terms(ring.field(), ring.order(), std::move(terms), ring.quotient_basis());
}

// Sorted descending, like monomials merged, zeros dropped.
std::vector<Term> canonicalize(const Field& field, MonomialOrder order, std::vector<Term> terms) {
  for (auto& t : terms) t.coef = field.normalize(t.coef);
  std::sort(terms.begin(), terms.end(),
            [order](const Term& a, const Term& b) { return compare(order, a.mono, b.mono) > 0; });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coef = field.add(out.back().coef, t.coef);
    } else {
      out.push_back(std::move(t));
    }
    if (out.back().coef == 0) out.pop_back();
  }
  return out;
}

}  // namespace

std::vector<Term> sub_scaled(const Field& field, MonomialOrder order, const std::vector<Term>& a,
                             const Rational& c, const Monomial& m, const std::vector<Term>& b) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size()) {
      out.push_back(a[i++]);
      continue;
    }
    Monomial bm = b[j].mono * m;
    if (i == a.size()) {
      out.push_back({std::move(bm), field.neg(field.mul(c, b[j].coef))});
      ++j;
      continue;
    }
    int cmp = compare(order, a[i].mono, bm);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back({std::move(bm), field.neg(field.mul(c, b[j].coef))});
      ++j;
    } else {
      Rational v = field.sub(a[i].coef, field.mul(c, b[j].coef));
      if (v != 0) out.push_back({a[i].mono, std::move(v)});
      ++i;
      ++j;
    }
  }
  return out;
}

Polynomial::Polynomial(Ring ring) : ring_(std::move(ring)) {}

Polynomial Polynomial::constant(Ring ring, const Rational& c) {
  std::vector<Term> t;
  t.push_back({Monomial(ring->nvars()), c});
  return from_terms(std::move(ring), std::move(t));
}

Polynomial Polynomial::variable(Ring ring, std::size_t index) {
  if (index >= ring->nvars()) throw ValidationError("variable index out of range");
  std::vector<Term> t;
  t.push_back({Monomial::variable(ring->nvars(), index), 1});
  return from_terms(std::move(ring), std::move(t));
}

Polynomial Polynomial::monomial(Ring ring, const Monomial& m, const Rational& c) {
  std::vector<Term> t;
  t.push_back({m, c});
  return from_terms(std::move(ring), std::move(t));
}

Polynomial Polynomial::from_terms(Ring ring, std::vector<Term> terms) {
  for (const auto& t : terms) {
    if (t.mono.size() != ring->nvars()) throw ValidationError("monomial length does not match ring");
  }
  auto canon = canonicalize(ring->field(), ring->order(), std::move(terms));
  canon = reduce_if_quotient(*ring, std::move(canon));
  return Polynomial(std::move(ring), std::move(canon));
}

Polynomial Polynomial::unchecked(Ring ring, std::vector<Term> terms) {
  return Polynomial(std::move(ring), std::move(terms));
}

bool Polynomial::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

bool Polynomial::is_one() const { return terms_.size() == 1 && terms_[0].mono.is_one() && terms_[0].coef == 1; }

Rational Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coef;
  return 0;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  for (const auto& t : terms_) {
    if (t.mono == m) return t.coef;
  }
  return 0;
}

int Polynomial::total_degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

bool Polynomial::is_homogeneous() const {
  for (const auto& t : terms_) {
    if (t.mono.degree() != terms_.front().mono.degree()) return false;
  }
  return true;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  require_same(ring_, other.ring_);
  return Polynomial(ring_, sub_scaled(ring_->field(), ring_->order(), terms_, Rational(-1),
                                      Monomial(ring_->nvars()), other.terms_));
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  require_same(ring_, other.ring_);
  return Polynomial(ring_, sub_scaled(ring_->field(), ring_->order(), terms_, Rational(1),
                                      Monomial(ring_->nvars()), other.terms_));
}

Polynomial Polynomial::operator-() const {
  std::vector<Term> t = terms_;
  for (auto& x : t) x.coef = ring_->field().neg(x.coef);
  return Polynomial(ring_, std::move(t));
}

Polynomial Polynomial::operator*(const Rational& c) const {
  Rational cn = ring_->field().normalize(c);
  if (cn == 0) return Polynomial(ring_);
  std::vector<Term> t = terms_;
  for (auto& x : t) x.coef = ring_->field().mul(x.coef, cn);
  return Polynomial(ring_, std::move(t));
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  require_same(ring_, other.ring_);
  if (is_zero() || other.is_zero()) return Polynomial(ring_);
  std::vector<Term> prod;
  prod.reserve(terms_.size() * other.terms_.size());
  const Field& f = ring_->field();
  for (const auto& a : terms_) {
    for (const auto& b : other.terms_) prod.push_back({a.mono * b.mono, f.mul(a.coef, b.coef)});
  }
  auto canon = canonicalize(f, ring_->order(), std::move(prod));
  return Polynomial(ring_, reduce_if_quotient(*ring_, std::move(canon)));
}

Polynomial Polynomial::mul_term(const Monomial& m, const Rational& c) const {
  const Field& f = ring_->field();
  Rational cn = f.normalize(c);
  if (cn == 0 || is_zero()) return Polynomial(ring_);
  std::vector<Term> t;
  t.reserve(terms_.size());
  for (const auto& x : terms_) t.push_back({x.mono * m, f.mul(x.coef, cn)});
  return Polynomial(ring_, reduce_if_quotient(*ring_, std::move(t)));
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1u;
    if (exponent > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return *this * ring_->field().inv(lc());
}

Polynomial Polynomial::in_ring(const Ring& target) const {
  if (ring_ == target) return *this;
  if (!ring_->compatible_with(*target)) throw RingMismatch("cannot move " + ring_->describe() + " to " + target->describe());
  return Polynomial(target, reduce_if_quotient(*target, terms_));
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const {
  if (point.size() != ring_->nvars()) throw ValidationError("evaluation point has wrong dimension");
  const Field& f = ring_->field();
  Rational sum = 0;
  for (const auto& t : terms_) {
    Rational v = t.coef;
    for (std::size_t i = 0; i < point.size(); ++i) {
      for (int e = 0; e < t.mono[i]; ++e) v = f.mul(v, point[i]);
    }
    sum = f.add(sum, v);
  }
  return sum;
}

Polynomial Polynomial::substitute(const Ring& target, const std::vector<Polynomial>& images) const {
  if (images.size() != ring_->nvars()) throw ValidationError("ring map needs one image per variable");
  for (const auto& im : images) require_same(im.ring(), target);
  Polynomial sum(target);
  for (const auto& t : terms_) {
    Polynomial v = constant(target, t.coef);
    for (std::size_t i = 0; i < images.size(); ++i) {
      if (t.mono[i] > 0) v = v * images[i].pow(static_cast<unsigned>(t.mono[i]));
    }
    sum += v;
  }
  return sum;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coef;
    bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    bool printed = false;
    if (c != 1 || t.mono.is_one()) {
      os << c.get_str();
      printed = true;
    }
    for (std::size_t i = 0; i < t.mono.size(); ++i) {
      if (t.mono[i] == 0) continue;
      if (printed) os << "*";
      os << ring_->variables()[i];
      if (t.mono[i] > 1) os << "^" << t.mono[i];
      printed = true;
    }
  }
  return os.str();
}

bool Polynomial::operator==(const Polynomial& other) const {
  if (!same_ring(ring_, other.ring_)) return false;
  if (terms_.size() != other.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].mono != other.terms_[i].mono || terms_[i].coef != other.terms_[i].coef) return false;
  }
  return true;
}

int compare(const Polynomial& a, const Polynomial& b) {
  MonomialOrder order = a.ring()->order();
  std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    int c = compare(order, a.terms()[i].mono, b.terms()[i].mono);
    if (c != 0) return c;
    if (a.terms()[i].coef != b.terms()[i].coef) return a.terms()[i].coef < b.terms()[i].coef ? -1 : 1;
  }
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  return 0;
}

}  // namespace cjl
