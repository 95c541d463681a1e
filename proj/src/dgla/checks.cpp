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

#include "cjl/dgla/checks.hpp"

#include <sstream>

#include "cjl/algebra/errors.hpp"

namespace cjl {

namespace {

Vector unit(std::size_t n, std::size_t i) {
  Vector v(n, Rational(0));
  v[i] = 1;
  return v;
}

bool is_zero(const Vector& v) {
  for (const auto& x : v) {
    if (x != 0) return false;
  }
  return true;
}

Vector add(const Field& f, const Vector& a, const Vector& b, const Rational& s = 1) {
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.add(a[i], f.mul(s, b[i]));
  return out;
}

bool odd(int a) { return a % 2 != 0; }

Rational koszul(int a, int b) { return odd(a) && odd(b) ? Rational(-1) : Rational(1); }

}  // namespace

std::string AxiomReport::summary() const {
  if (ok()) return "valid";
  std::ostringstream os;
  const auto& v = violations.front();
  os << v.axiom << " fails at (";
  for (std::size_t i = 0; i < v.witness.size(); ++i) os << (i ? ", " : "") << v.witness[i];
  os << ")";
  if (!v.detail.empty()) os << ": " << v.detail;
  if (violations.size() > 1) os << " [+" << violations.size() - 1 << " more]";
  return os.str();
}

AxiomReport check_dgla(const Dgla& c) {
  AxiomReport rep;
  const Field& f = c.field();
  const GradedSpace& s = c.space();
  const std::size_t n = s.total();
  std::vector<Vector> e;
  std::vector<Vector> de;
  for (std::size_t x = 0; x < n; ++x) {
    e.push_back(unit(n, x));
    de.push_back(c.diff(e[x]));
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (!is_zero(c.diff(de[x]))) rep.violations.push_back({"d^2=0", {s.label(x)}, ""});
  }
  std::vector<std::vector<Vector>> br(n, std::vector<Vector>(n));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) br[x][y] = c.bracket(e[x], e[y]);
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x; y < n; ++y) {
      int dx = s.degree_of(x), dy = s.degree_of(y);
      // [x,y] + (-1)^{|x||y|} [y,x] = 0
      if (!is_zero(add(f, br[x][y], br[y][x], koszul(dx, dy)))) {
        rep.violations.push_back({"skew-symmetry", {s.label(x), s.label(y)}, ""});
      }
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      int dx = s.degree_of(x);
      // d[x,y] = [dx,y] + (-1)^{|x|} [x,dy]
      Vector lhs = c.diff(br[x][y]);
      Vector rhs = add(f, c.bracket(de[x], e[y]), c.bracket(e[x], de[y]), odd(dx) ? Rational(-1) : Rational(1));
      if (lhs != rhs) rep.violations.push_back({"Leibniz", {s.label(x), s.label(y)}, ""});
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        int a = s.degree_of(x), b = s.degree_of(y), cdeg = s.degree_of(z);
        Vector t1 = c.bracket(e[x], br[y][z]);
        Vector t2 = c.bracket(e[y], br[z][x]);
        Vector t3 = c.bracket(e[z], br[x][y]);
        Vector sum = add(f, add(f, Vector(n, Rational(0)), t1, koszul(a, cdeg)), t2, koszul(b, a));
        sum = add(f, sum, t3, koszul(cdeg, b));
        if (!is_zero(sum)) rep.violations.push_back({"Jacobi", {s.label(x), s.label(y), s.label(z)}, ""});
      }
    }
  }
  return rep;
}

AxiomReport check_pair(const DglaPair& p) {
  AxiomReport rep = check_dgla(p.lie());
  const Field& f = p.field();
  const GradedSpace& cs = p.lie().space();
  const GradedSpace& ms = p.module();
  const std::size_t nc = cs.total(), nm = ms.total();
  std::vector<Vector> ec, em, dec, dem;
  for (std::size_t x = 0; x < nc; ++x) {
    ec.push_back(unit(nc, x));
    dec.push_back(p.lie().diff(ec[x]));
  }
  for (std::size_t m = 0; m < nm; ++m) {
    em.push_back(unit(nm, m));
    dem.push_back(p.module_diff(em[m]));
  }
  for (std::size_t m = 0; m < nm; ++m) {
    if (!is_zero(p.module_diff(dem[m]))) rep.violations.push_back({"module d^2=0", {ms.label(m)}, ""});
  }
  std::vector<std::vector<Vector>> act(nc, std::vector<Vector>(nm));
  for (std::size_t x = 0; x < nc; ++x) {
    for (std::size_t m = 0; m < nm; ++m) act[x][m] = p.act(ec[x], em[m]);
  }
  for (std::size_t x = 0; x < nc; ++x) {
    for (std::size_t m = 0; m < nm; ++m) {
      int dx = cs.degree_of(x);
      // d(x m) = (dx) m + (-1)^{|x|} x (dm)
      Vector lhs = p.module_diff(act[x][m]);
      Vector rhs = add(f, p.act(dec[x], em[m]), p.act(ec[x], dem[m]), odd(dx) ? Rational(-1) : Rational(1));
      if (lhs != rhs) rep.violations.push_back({"module Leibniz", {cs.label(x), ms.label(m)}, ""});
    }
  }
  for (std::size_t x = 0; x < nc; ++x) {
    for (std::size_t y = 0; y < nc; ++y) {
      Vector xy = p.lie().bracket(ec[x], ec[y]);
      for (std::size_t m = 0; m < nm; ++m) {
        // [x,y] m = x(y m) - (-1)^{|x||y|} y(x m)
        Vector lhs = p.act(xy, em[m]);
        Vector rhs = add(f, p.act(ec[x], act[y][m]), p.act(ec[y], act[x][m]),
                         -koszul(cs.degree_of(x), cs.degree_of(y)));
        if (lhs != rhs) rep.violations.push_back({"module bracket", {cs.label(x), cs.label(y), ms.label(m)}, ""});
      }
    }
  }
  return rep;
}

void require_valid(const AxiomReport& report, const std::string& what) {
  if (!report.ok()) throw ValidationError(what + " violates an axiom: " + report.summary());
}

}  // namespace cjl
