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

#include <gmpxx.h>

#include <string>

namespace cjl {

using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "3", "-7/2", "0". Throws ValidationError on bad input.
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);

/// Coefficient field: the rationals or a prime field F_p. Elements of F_p
/// are stored as Rationals with integral value in [0, p).
class Field {
 public:
  static Field rationals() { return Field(0); }
  static Field prime(unsigned long p);

  bool is_rational() const { return p_ == 0; }
  unsigned long characteristic() const { return p_; }

  Rational normalize(const Rational& x) const;
  Rational add(const Rational& a, const Rational& b) const;
  Rational sub(const Rational& a, const Rational& b) const;
  Rational mul(const Rational& a, const Rational& b) const;
  Rational neg(const Rational& a) const;
  Rational inv(const Rational& a) const;
  Rational div(const Rational& a, const Rational& b) const { return mul(a, inv(b)); }

  bool operator==(const Field& other) const { return p_ == other.p_; }
  std::string name() const;

 private:
  explicit Field(unsigned long p) : p_(p) {}
  unsigned long p_;
};

}  // namespace cjl
