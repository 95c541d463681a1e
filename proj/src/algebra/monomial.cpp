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

#include "cjl/algebra/monomial.hpp"

#include <algorithm>
#include <numeric>

#include "cjl/algebra/errors.hpp"

namespace cjl {

MonomialOrder parse_order(const std::string& name) {
  if (name == "degrevlex" || name == "grevlex") return MonomialOrder::DegRevLex;
  if (name == "lex") return MonomialOrder::Lex;
  if (name == "deglex" || name == "degree-then-lex") return MonomialOrder::DegLex;
  throw ValidationError("unknown monomial order '" + name + "'");
}

std::string order_name(MonomialOrder order) {
  switch (order) {
    case MonomialOrder::DegRevLex: return "degrevlex";
    case MonomialOrder::Lex: return "lex";
    case MonomialOrder::DegLex: return "deglex";
  }
  return "degrevlex";
}

Monomial::Monomial(std::vector<int> exps) : exps_(std::move(exps)) {
  for (int e : exps_) {
    if (e < 0) throw ValidationError("negative exponent");
  }
  degree_ = std::accumulate(exps_.begin(), exps_.end(), 0);
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index, int power) {
  Monomial m(nvars);
  m.exps_[index] = power;
  m.degree_ = power;
  return m;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += other.exps_[i];
  r.degree_ = degree_ + other.degree_;
  return r;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] -= other.exps_[i];
  r.degree_ = degree_ - other.degree_;
  return r;
}

bool Monomial::divisible_by(const Monomial& other) const {
  if (other.degree_ > degree_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] < other.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial r(*this);
  int deg = 0;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    r.exps_[i] = std::max(exps_[i], other.exps_[i]);
    deg += r.exps_[i];
  }
  r.degree_ = deg;
  return r;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > 0 && other.exps_[i] > 0) return false;
  }
  return true;
}

std::vector<std::size_t> Monomial::support() const {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > 0) s.push_back(i);
  }
  return s;
}

std::size_t Monomial::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (int e : exps_) {
    h ^= static_cast<std::size_t>(e) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

int compare(MonomialOrder order, const Monomial& a, const Monomial& b) {
  const std::size_t n = a.size();
  switch (order) {
    case MonomialOrder::Lex:
      for (std::size_t i = 0; i < n; ++i) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
      }
      return 0;
    case MonomialOrder::DegLex:
      if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
      for (std::size_t i = 0; i < n; ++i) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
      }
      return 0;
    case MonomialOrder::DegRevLex:
      if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
      // Last differing variable: the smaller exponent wins.
      for (std::size_t i = n; i-- > 0;) {
        if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
      }
      return 0;
  }
  return 0;
}

}  // namespace cjl
