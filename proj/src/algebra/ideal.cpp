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

#include "cjl/algebra/ideal.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "cjl/algebra/errors.hpp"

namespace cjl {

Ideal::Ideal(Ring ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  for (auto& g : generators) {
    if (!g.ring()->compatible_with(*ring_)) throw RingMismatch("ideal generator from " + g.ring()->describe());
    Polynomial h = g.in_ring(ring_);
    if (!h.is_zero()) gens_.push_back(std::move(h));
  }
}

Ideal Ideal::zero(Ring ring) { return Ideal(std::move(ring), {}); }

Ideal Ideal::unit(Ring ring) {
  Polynomial one = Polynomial::constant(ring, 1);
  return Ideal(std::move(ring), {one});
}

const std::vector<Polynomial>& Ideal::groebner() const {
  std::call_once(cache_->once, [this] {
    Ring base = ring_->base();
    std::vector<Polynomial> lifted;
    for (const auto& g : gens_) lifted.push_back(g.in_ring(base));
    for (const auto& q : ring_->quotient_basis()) lifted.push_back(q);
    cache_->basis = reduced_groebner(lifted);
  });
  return cache_->basis;
}

bool Ideal::is_zero() const { return gens_.empty(); }

bool Ideal::is_unit() const {
  const auto& gb = groebner();
  return gb.size() == 1 && gb.front().is_constant();
}

bool Ideal::contains(const Polynomial& f) const {
  if (!f.ring()->compatible_with(*ring_)) throw RingMismatch("membership test across rings");
  if (f.is_zero()) return true;
  return normal_form(f.in_ring(ring_->base()), groebner()).is_zero();
}

bool Ideal::contains(const Ideal& other) const {
  if (!same_ring(ring_, other.ring_)) throw RingMismatch("containment test across rings");
  for (const auto& g : other.gens_) {
    if (!contains(g)) return false;
  }
  return true;
}

Ideal Ideal::operator+(const Ideal& other) const {
  if (!same_ring(ring_, other.ring_)) throw RingMismatch("sum of ideals across rings");
  std::vector<Polynomial> g = gens_;
  g.insert(g.end(), other.gens_.begin(), other.gens_.end());
  return Ideal(ring_, std::move(g));
}

Ideal Ideal::operator*(const Ideal& other) const {
  if (!same_ring(ring_, other.ring_)) throw RingMismatch("product of ideals across rings");
  std::vector<Polynomial> g;
  for (const auto& a : gens_) {
    for (const auto& b : other.gens_) g.push_back(a * b);
  }
  return Ideal(ring_, std::move(g));
}

Ideal Ideal::preimage() const {
  Ideal out(ring_->base(), groebner());
  std::call_once(out.cache_->once, [&] { out.cache_->basis = groebner(); });
  return out;
}

Ideal Ideal::in_ring(const Ring& target) const {
  if (same_ring(ring_, target)) return *this;
  return Ideal(target, gens_);
}

Ideal Ideal::mapped(const Ring& target, const std::vector<Polynomial>& images) const {
  std::vector<Polynomial> g;
  for (const auto& f : gens_) g.push_back(f.substitute(target, images));
  return Ideal(target, std::move(g));
}

std::vector<Polynomial> Ideal::canonical_generators() const {
  std::vector<Polynomial> out;
  for (const auto& g : groebner()) {
    Polynomial h = g.in_ring(ring_);
    if (!h.is_zero()) out.push_back(std::move(h));
  }
  return out;
}

std::vector<std::string> Ideal::canonical_strings() const {
  std::vector<std::string> out;
  for (const auto& g : canonical_generators()) out.push_back(g.to_string());
  return out;
}

std::string Ideal::to_string() const {
  std::ostringstream os;
  os << "(";
  auto s = canonical_strings();
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? ", " : "") << s[i];
  os << ")";
  return os.str();
}

bool ideal_membership(const Polynomial& f, const Ideal& ideal) {
  if (!same_ring(f.ring(), ideal.ring())) throw RingMismatch("membership test across rings");
  return ideal.contains(f);
}

bool ideal_equal(const Ideal& a, const Ideal& b) {
  if (!same_ring(a.ring(), b.ring())) throw RingMismatch("ideal comparison across rings");
  const auto& ga = a.groebner();
  const auto& gb = b.groebner();
  if (ga.size() != gb.size()) return false;
  for (std::size_t i = 0; i < ga.size(); ++i) {
    if (ga[i] != gb[i]) return false;
  }
  return true;
}

Polynomial embed(const Polynomial& f, const Ring& extended) {
  const std::size_t n = f.ring()->nvars();
  const std::size_t m = extended->nvars();
  if (m < n || !(f.ring()->field() == extended->field())) throw RingMismatch("embedding into a smaller ring");
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    std::vector<int> e = t.mono.exponents();
    e.resize(m, 0);
    terms.push_back({Monomial(std::move(e)), t.coef});
  }
  return Polynomial::from_terms(extended, std::move(terms));
}

bool radical_membership(const Polynomial& f, const Ideal& ideal) {
  if (!same_ring(f.ring(), ideal.ring())) throw RingMismatch("radical membership across rings");
  if (ideal.contains(f)) return true;
  Ring base = ideal.ring()->base();
  std::string tname = "_t";
  while (base->index_of(tname)) tname += "_";
  Ring ext = base->extended({tname});
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.groebner()) gens.push_back(embed(g, ext));
  Polynomial t = Polynomial::variable(ext, base->nvars());
  gens.push_back(Polynomial::constant(ext, 1) - t * embed(f.in_ring(base), ext));
  return Ideal(ext, std::move(gens)).is_unit();
}

std::vector<Monomial> leading_monomials(const Ideal& ideal) {
  std::vector<Monomial> out;
  for (const auto& g : ideal.groebner()) out.push_back(g.lm());
  return out;
}

Ideal leading_term_ideal(const Ideal& ideal) {
  Ring base = ideal.ring()->base();
  std::vector<Polynomial> g;
  for (const auto& m : leading_monomials(ideal)) g.push_back(Polynomial::monomial(base, m));
  return Ideal(base, std::move(g));
}

int monomial_krull_dimension(const std::vector<Monomial>& generators, std::size_t nvars) {
  std::vector<std::vector<std::size_t>> supports;
  for (const auto& m : generators) {
    if (m.is_one()) return -1;
    supports.push_back(m.support());
  }
  // Depth-first search over independent sets, variables in increasing order.
  std::vector<bool> chosen(nvars, false);
  int best = 0;
  std::function<void(std::size_t, int)> dfs = [&](std::size_t next, int size) {
    best = std::max(best, size);
    if (size + static_cast<int>(nvars - next) <= best) return;
    for (std::size_t v = next; v < nvars; ++v) {
      chosen[v] = true;
      bool ok = true;
      for (const auto& s : supports) {
        if (std::all_of(s.begin(), s.end(), [&](std::size_t x) { return chosen[x]; })) {
          ok = false;
          break;
        }
      }
      if (ok) dfs(v + 1, size + 1);
      chosen[v] = false;
      if (size + static_cast<int>(nvars - v - 1) <= best) return;
    }
  };
  dfs(0, 0);
  return best;
}

int krull_dimension(const Ideal& ideal) {
  return monomial_krull_dimension(leading_monomials(ideal), ideal.ring()->nvars());
}

}  // namespace cjl
