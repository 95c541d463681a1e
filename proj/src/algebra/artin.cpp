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

#include "cjl/algebra/artin.hpp"

#include <algorithm>

#include "cjl/algebra/errors.hpp"

namespace cjl {

namespace {

std::vector<Monomial> standard_monomials(const std::vector<Polynomial>& gb, std::size_t nvars) {
  std::vector<Monomial> leads;
  for (const auto& g : gb) leads.push_back(g.lm());
  for (std::size_t v = 0; v < nvars; ++v) {
    bool pure = std::any_of(leads.begin(), leads.end(), [&](const Monomial& m) {
      return m.support() == std::vector<std::size_t>{v} || m.is_one();
    });
    if (!pure) throw ValidationError("quotient is not finite-dimensional: no pure power of variable " + std::to_string(v) + " is a leading term");
  }
  std::vector<Monomial> out;
  std::vector<Monomial> frontier{Monomial(nvars)};
  auto standard = [&](const Monomial& m) {
    return std::none_of(leads.begin(), leads.end(), [&](const Monomial& l) { return m.divisible_by(l); });
  };
  while (!frontier.empty()) {
    std::vector<Monomial> next;
    for (const auto& m : frontier) {
      if (!standard(m)) continue;
      if (std::find(out.begin(), out.end(), m) != out.end()) continue;
      out.push_back(m);
      for (std::size_t v = 0; v < nvars; ++v) next.push_back(m * Monomial::variable(nvars, v));
    }
    frontier = std::move(next);
  }
  return out;
}

}  // namespace

ArtinLocalAlgebra make_artin(const Ring& ring, const std::vector<Polynomial>& relations) {
  return make_artin(RingContext::quotient(ring, relations));
}

ArtinLocalAlgebra make_artin(const Ring& quotient_ring) {
  if (quotient_ring->is_zero_ring()) throw ValidationError("the zero ring is not a local algebra");
  ArtinLocalAlgebra a;
  a.ring_ = quotient_ring;
  const std::size_t n = quotient_ring->nvars();
  auto basis = standard_monomials(quotient_ring->quotient_basis(), n);
  MonomialOrder order = quotient_ring->order();
  std::sort(basis.begin(), basis.end(), [order](const Monomial& x, const Monomial& y) { return compare(order, x, y) < 0; });
  a.basis_ = basis;
  for (const auto& m : basis) a.labels_.push_back(Polynomial::monomial(quotient_ring, m).to_string());

  const std::size_t d = basis.size();
  a.table_.assign(d, std::vector<Vector>(d));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      a.table_[i][j] = a.coordinates(a.basis_element(i) * a.basis_element(j));
    }
  }

  // m^k spanned by products; stop once it vanishes.
  std::vector<Vector> current;
  for (std::size_t i = 1; i < d; ++i) {
    Vector v(d, Rational(0));
    v[i] = 1;
    current.push_back(v);
  }
  a.power_dims_ = {d, d - 1};
  int k = 1;
  while (!current.empty()) {
    if (k > static_cast<int>(d) + 1) throw ValidationError("quotient is not local: maximal ideal is not nilpotent");
    std::vector<Vector> products;
    for (const auto& v : current) {
      for (std::size_t i = 1; i < d; ++i) products.push_back(a.coordinates(a.element(v) * a.basis_element(i)));
    }
    std::vector<Vector> next;
    if (!products.empty()) {
      Matrix m = Matrix::from_columns(a.field(), products, d);
      for (auto p : independent_columns(m)) next.push_back(products[p]);
    }
    if (next.size() >= current.size() && !next.empty()) {
      throw ValidationError("quotient is not local: some non-constant standard monomial is not nilpotent");
    }
    current = std::move(next);
    ++k;
    a.power_dims_.push_back(current.size());
  }
  a.power_dims_.pop_back();
  a.nilpotency_ = k;
  return a;
}

std::vector<std::size_t> ArtinLocalAlgebra::max_ideal_basis() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 1; i < basis_.size(); ++i) out.push_back(i);
  return out;
}

Polynomial ArtinLocalAlgebra::basis_element(std::size_t i) const { return Polynomial::monomial(ring_, basis_.at(i)); }

Vector ArtinLocalAlgebra::coordinates(const Polynomial& a) const {
  if (!same_ring(a.ring(), ring_)) throw RingMismatch("element of another algebra");
  Vector v(basis_.size(), Rational(0));
  for (const auto& t : a.terms()) {
    auto it = std::find(basis_.begin(), basis_.end(), t.mono);
    if (it == basis_.end()) throw ValidationError("element is not in normal form");
    v[static_cast<std::size_t>(it - basis_.begin())] = t.coef;
  }
  return v;
}

Polynomial ArtinLocalAlgebra::element(const Vector& coords) const {
  if (coords.size() != basis_.size()) throw ValidationError("coordinate vector has wrong length");
  std::vector<Term> terms;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] != 0) terms.push_back({basis_[i], coords[i]});
  }
  return Polynomial::from_terms(ring_, std::move(terms));
}

Polynomial ArtinLocalAlgebra::inverse(const Polynomial& a) const {
  if (!is_unit(a)) throw ValidationError("element of the maximal ideal has no inverse");
  Rational c = field().inv(a.constant_term());
  Polynomial n = a * c - one();
  Polynomial sum = one();
  Polynomial power = one();
  for (int j = 1; j < nilpotency_; ++j) {
    power = power * (-n);
    sum += power;
  }
  return sum * c;
}

Ideal ArtinLocalAlgebra::max_ideal() const {
  std::vector<Polynomial> g;
  for (std::size_t v = 0; v < ring_->nvars(); ++v) g.push_back(Polynomial::variable(ring_, v));
  return Ideal(ring_, std::move(g));
}

std::size_t ArtinLocalAlgebra::power_dim(int k) const {
  if (k < 0) return basis_.size();
  if (static_cast<std::size_t>(k) >= power_dims_.size()) return 0;
  return power_dims_[static_cast<std::size_t>(k)];
}

}  // namespace cjl
