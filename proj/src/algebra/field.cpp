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

#include "cjl/algebra/field.hpp"

#include <cctype>

#include "cjl/algebra/errors.hpp"

namespace cjl {

Rational parse_rational(const std::string& text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw ValidationError("empty rational literal");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  bool slash = false;
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] == '/') {
      if (slash || i == start || i + 1 == s.size()) throw ValidationError("bad rational literal '" + text + "'");
      slash = true;
    } else if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
      throw ValidationError("bad rational literal '" + text + "'");
    }
  }
  if (start == s.size()) throw ValidationError("bad rational literal '" + text + "'");
  if (s[0] == '+') s.erase(0, 1);
  Rational q;
  if (q.set_str(s, 10) != 0) throw ValidationError("bad rational literal '" + text + "'");
  if (q.get_den() == 0) throw ValidationError("zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

Field Field::prime(unsigned long p) {
  if (p < 2) throw ValidationError("F_p needs p >= 2");
  if (mpz_probab_prime_p(Integer(p).get_mpz_t(), 30) == 0) {
    throw ValidationError("F_p modulus " + std::to_string(p) + " is not prime");
  }
  return Field(p);
}

Rational Field::normalize(const Rational& x) const {
  if (p_ == 0) {
    Rational c = x;
    c.canonicalize();
    return c;
  }
  Integer p(p_);
  Integer num = x.get_num() % p;
  if (num < 0) num += p;
  Integer den = x.get_den() % p;
  if (den == 0) throw ValidationError("denominator vanishes in F_" + std::to_string(p_));
  if (den != 1) {
    Integer dinv;
    mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
    num = (num * dinv) % p;
  }
  return Rational(num);
}

Rational Field::add(const Rational& a, const Rational& b) const {
  if (p_ == 0) return a + b;
  return normalize(a + b);
}

Rational Field::sub(const Rational& a, const Rational& b) const {
  if (p_ == 0) return a - b;
  return normalize(a - b);
}

Rational Field::mul(const Rational& a, const Rational& b) const {
  if (p_ == 0) return a * b;
  return normalize(a * b);
}

Rational Field::neg(const Rational& a) const {
  if (p_ == 0) return -a;
  return normalize(-a);
}

Rational Field::inv(const Rational& a) const {
  if (a == 0) throw ValidationError("division by zero");
  if (p_ == 0) return 1 / a;
  Integer p(p_);
  Integer r;
  Integer n = a.get_num();
  mpz_invert(r.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
  return Rational(r);
}

std::string Field::name() const { return p_ == 0 ? "Q" : "F_" + std::to_string(p_); }

}  // namespace cjl
