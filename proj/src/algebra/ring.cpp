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

#include <algorithm>
#include <set>
#include <sstream>

#include "cjl/algebra/errors.hpp"
#include "cjl/algebra/groebner.hpp"
#include "cjl/algebra/polynomial.hpp"

namespace cjl {

RingContext::RingContext(Field field, std::vector<std::string> vars, MonomialOrder order)
    : field_(field), vars_(std::move(vars)), order_(order) {}

Ring RingContext::make(Field field, std::vector<std::string> variables, MonomialOrder order) {
  std::set<std::string> seen;
  for (const auto& v : variables) {
    if (v.empty()) throw ValidationError("empty variable name");
    if (!seen.insert(v).second) throw ValidationError("duplicate variable name '" + v + "'");
  }
  return Ring(new RingContext(field, std::move(variables), order));
}

Ring RingContext::make(Field field, std::size_t nvars, MonomialOrder order) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < nvars; ++i) names.push_back("x" + std::to_string(i));
  return make(field, std::move(names), order);
}

Ring RingContext::quotient(const Ring& base_ring, const std::vector<Polynomial>& relations) {
  Ring base = base_ring->base();
  std::vector<Polynomial> lifted;
  lifted.reserve(relations.size());
  for (const auto& r : relations) {
    if (!r.ring()->compatible_with(*base)) throw RingMismatch("quotient relation from another ring");
    lifted.push_back(r.in_ring(base));
  }
  // Relations of a quotient ring are kept as well.
  for (const auto& g : base_ring->quotient_basis()) lifted.push_back(g);
  auto gb = reduced_groebner(lifted);
  if (gb.empty()) return base;
  auto* ctx = new RingContext(base->field_, base->vars_, base->order_);
  ctx->base_ = base;
  ctx->quotient_gb_ = std::move(gb);
  return Ring(ctx);
}

Ring RingContext::base() const {
  if (base_) return base_;
  return shared_from_this();
}

bool RingContext::is_zero_ring() const {
  return quotient_gb_.size() == 1 && quotient_gb_.front().is_constant();
}

std::optional<std::size_t> RingContext::index_of(const std::string& name) const {
  auto it = std::find(vars_.begin(), vars_.end(), name);
  if (it == vars_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - vars_.begin());
}

Ring RingContext::extended(const std::vector<std::string>& extra) const {
  auto names = vars_;
  names.insert(names.end(), extra.begin(), extra.end());
  return make(field_, std::move(names), order_);
}

bool RingContext::compatible_with(const RingContext& other) const {
  return field_ == other.field_ && vars_.size() == other.vars_.size() && order_ == other.order_;
}

bool RingContext::same_as(const RingContext& other) const {
  if (this == &other) return true;
  if (!(field_ == other.field_) || vars_ != other.vars_ || order_ != other.order_) return false;
  if (quotient_gb_.size() != other.quotient_gb_.size()) return false;
  for (std::size_t i = 0; i < quotient_gb_.size(); ++i) {
    if (quotient_gb_[i].terms().size() != other.quotient_gb_[i].terms().size()) return false;
    for (std::size_t j = 0; j < quotient_gb_[i].terms().size(); ++j) {
      const auto& a = quotient_gb_[i].terms()[j];
      const auto& b = other.quotient_gb_[i].terms()[j];
      if (a.mono != b.mono || a.coef != b.coef) return false;
    }
  }
  return true;
}

std::string RingContext::describe() const {
  std::ostringstream os;
  os << field_.name() << "[";
  for (std::size_t i = 0; i < vars_.size(); ++i) os << (i ? "," : "") << vars_[i];
  os << "]";
  if (has_quotient()) {
    os << "/(";
    for (std::size_t i = 0; i < quotient_gb_.size(); ++i) os << (i ? ", " : "") << quotient_gb_[i].to_string();
    os << ")";
  }
  return os.str();
}

bool same_ring(const Ring& a, const Ring& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->same_as(*b);
}

}  // namespace cjl
