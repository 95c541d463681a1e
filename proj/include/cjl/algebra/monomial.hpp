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

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace cjl {

enum class MonomialOrder { DegRevLex, Lex, DegLex };

MonomialOrder parse_order(const std::string& name);
std::string order_name(MonomialOrder order);

/// Exponent vector, one entry per ring variable.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<int> exps);

  static Monomial variable(std::size_t nvars, std::size_t index, int power = 1);

  std::size_t size() const { return exps_.size(); }
  int operator[](std::size_t i) const { return exps_[i]; }
  int degree() const { return degree_; }
  const std::vector<int>& exponents() const { return exps_; }
  bool is_one() const { return degree_ == 0; }

  Monomial operator*(const Monomial& other) const;
  /// Requires divides(other, *this).
  Monomial operator/(const Monomial& other) const;
  bool divisible_by(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  bool coprime(const Monomial& other) const;
  /// Indices of variables with positive exponent.
  std::vector<std::size_t> support() const;

  bool operator==(const Monomial& other) const { return exps_ == other.exps_; }
  bool operator!=(const Monomial& other) const { return exps_ != other.exps_; }

  std::size_t hash() const;

 private:
  std::vector<int> exps_;
  int degree_ = 0;
};

/// Three-way comparison: negative if a < b, zero if equal, positive if a > b.
int compare(MonomialOrder order, const Monomial& a, const Monomial& b);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

}  // namespace cjl
