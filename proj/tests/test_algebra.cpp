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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <random>
#include <set>

#include "cjl/algebra/artin.hpp"
#include "cjl/algebra/errors.hpp"
#include "cjl/algebra/groebner.hpp"
#include "cjl/algebra/linalg.hpp"
#include "support.hpp"

using namespace cjl;
using namespace cjl::test;

namespace {

// Krull dimension of k[x]/(monomials): the largest variable set S such that
// no generator is supported inside S.
int brute_force_monomial_dim(const std::vector<std::vector<int>>& gens, std::size_t n) {
  int best = -1;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    bool independent = true;
    for (const auto& g : gens) {
      bool inside = true;
      for (std::size_t v = 0; v < n; ++v) {
        if (g[v] > 0 && !(mask & (1u << v))) inside = false;
      }
      if (inside) independent = false;
    }
    if (independent) best = std::max(best, __builtin_popcount(mask));
  }
  return best;
}

// Standard monomials of a monomial ideal up to a degree bound.
std::vector<std::vector<int>> standard_monomials(const std::vector<std::vector<int>>& leads, std::size_t n, int bound) {
  std::vector<std::vector<int>> out;
  std::vector<int> e(n, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t v, int left) {
    if (v == n) {
      for (const auto& l : leads) {
        bool divides = true;
        for (std::size_t k = 0; k < n; ++k) divides = divides && l[k] <= e[k];
        if (divides) return;
      }
      out.push_back(e);
      return;
    }
    for (int d = 0; d <= left; ++d) {
      e[v] = d;
      rec(v + 1, left - d);
    }
    e[v] = 0;
  };
  rec(0, bound);
  return out;
}

}  // namespace

TEST_CASE("rationals are stored reduced with positive denominator") {
  Rational q = parse_rational("-6/4");
  CHECK(q == Rational(-3, 2));
  CHECK(q.get_den() == 2);
  CHECK(parse_rational("-10/5") == -2);
  CHECK_THROWS_AS(parse_rational("1/0"), ValidationError);
  CHECK_THROWS_AS(parse_rational("1//2"), ValidationError);
}

TEST_CASE("prime field arithmetic") {
  Field f = Field::prime(7);
  for (int a = 1; a < 7; ++a) CHECK(f.mul(a, f.inv(a)) == 1);
  CHECK(f.normalize(Rational(1, 2)) == 4);
  CHECK(f.add(5, 4) == 2);
  CHECK_THROWS_AS(Field::prime(9), ValidationError);
}

TEST_CASE("exact arithmetic round trip") {
  Ring r = qring({"x", "y"});
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> c(-5, 5);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Term> ta, tb;
    for (int k = 0; k < 4; ++k) {
      ta.push_back({Monomial({c(rng) & 3, c(rng) & 3}), Rational(c(rng), 1 + (c(rng) & 3))});
      tb.push_back({Monomial({c(rng) & 3, c(rng) & 3}), Rational(c(rng), 1 + (c(rng) & 3))});
    }
    Polynomial a = Polynomial::from_terms(r, ta), b = Polynomial::from_terms(r, tb);
    CHECK((a + b) - b == a);
    CHECK(a * b == b * a);
  }
}

TEST_CASE("monomial orders") {
  Ring r = qring({"x", "y", "z"});
  Monomial xz({1, 0, 1}), y2({0, 2, 0}), x({1, 0, 0}), y5({0, 5, 0});
  CHECK(compare(MonomialOrder::DegRevLex, y2, xz) > 0);
  CHECK(compare(MonomialOrder::DegLex, xz, y2) > 0);
  CHECK(compare(MonomialOrder::Lex, x, y5) > 0);
  CHECK(compare(MonomialOrder::DegRevLex, y5, x) > 0);
  CHECK(P(r, "3/2*x^2*y - z + 1").to_string() == "3/2*x^2*y - z + 1");
}

TEST_CASE("groebner basis examples") {
  Ring r1 = qring({"x"});
  CHECK(strings(I(r1, {"x"}).groebner()) == std::vector<std::string>{"x"});
  CHECK(Ideal::zero(r1).groebner().empty());

  Ring r = qring({"x", "y"});
  // y*(x^2 - y) - x*(x*y - 1) = x - y^2 produces the third element; all
  // other S-pairs reduce to zero by hand.
  Ideal i = I(r, {"x^2 - y", "x*y - 1"});
  CHECK(strings(i.groebner()) == std::vector<std::string>{"x^2 - y", "x*y - 1", "y^2 - x"});
  CHECK(satisfies_buchberger_criterion(i.groebner()));
  // V(i) is the three cube roots of unity: quotient has dimension 3.
  auto leads = leading_monomials(i);
  std::vector<std::vector<int>> le;
  for (const auto& m : leads) le.push_back(m.exponents());
  CHECK(standard_monomials(le, 2, 6).size() == 3);
}

TEST_CASE("groebner output does not depend on generator order") {
  Ring r = qring({"x", "y", "z"});
  Ideal a = I(r, {"x*y - z^2", "y^2 - x*z", "x^2 - y*z"});
  Ideal b = I(r, {"x^2 - y*z", "x*y - z^2", "y^2 - x*z"});
  CHECK(strings(a.groebner()) == strings(b.groebner()));
}

TEST_CASE("step budget raises a resource-limit error") {
  Ring r = qring({"x", "y", "z"});
  auto gens = parse_polynomials(r, {"x^3 - y*z", "y^3 - x*z", "z^3 - x*y", "x*y*z - 1"});
  GroebnerOptions opts;
  opts.max_pairs = 1;
  CHECK_THROWS_AS(reduced_groebner(gens, opts), ResourceLimitError);
}

TEST_CASE("ideal membership") {
  Ring r = qring({"x", "y"});
  CHECK(ideal_membership(P(r, "x^2"), I(r, {"x"})));
  CHECK_FALSE(ideal_membership(P(r, "1"), I(r, {"x", "y"})));
  // Division oracle for (x^2 - y): f is a member iff f(x, x^2) = 0.
  Ideal parab = I(r, {"x^2 - y"});
  Ring rx = qring({"x", "y"});
  for (const char* f : {"y^3", "x^6 - y^3", "x^2*y - y^2", "x*y - x^3 + 1"}) {
    Polynomial g = P(r, f);
    Polynomial sub = g.substitute(rx, {P(rx, "x"), P(rx, "x^2")});
    CHECK(ideal_membership(g, parab) == sub.is_zero());
  }
  Ring other = qring({"a", "b", "c"});
  CHECK_THROWS_AS(ideal_membership(P(other, "a"), parab), RingMismatch);
}

TEST_CASE("ideal equality") {
  Ring r = qring({"x", "y"});
  CHECK(ideal_equal(I(r, {"x", "y"}), I(r, {"y", "x"})));
  CHECK_FALSE(ideal_equal(I(r, {"x"}), I(r, {"x^2"})));
  Ideal a = I(r, {"x + y", "x - y"}), b = I(r, {"x", "y"});
  bool mutual = true;
  for (const auto& g : a.generators()) mutual = mutual && b.contains(g);
  for (const auto& g : b.generators()) mutual = mutual && a.contains(g);
  CHECK(mutual);
  CHECK(ideal_equal(a, b));
  CHECK(ideal_equal(b, a));
}

TEST_CASE("radical membership") {
  Ring r = qring({"x", "y"});
  CHECK(radical_membership(P(r, "x"), I(r, {"x^2"})));
  CHECK_FALSE(radical_membership(P(r, "y"), I(r, {"x^2"})));
  Ideal i = I(r, {"(x + y)^3*(x - y)"});
  CHECK(radical_membership(P(r, "x^2 - y^2"), i));
  CHECK_FALSE(radical_membership(P(r, "x + y"), i));
  CHECK(ideal_membership(P(r, "(x^2 - y^2)^3"), i));
  Ideal j = I(r, {"(x + y)^3"});
  CHECK(radical_membership(P(r, "x + y"), j));
}

TEST_CASE("krull dimension examples") {
  Ring r = qring({"x", "y", "z"});
  CHECK(krull_dimension(Ideal::zero(r)) == 3);
  CHECK(krull_dimension(I(r, {"x", "y", "z"})) == 0);
  CHECK(krull_dimension(Ideal::unit(r)) == -1);
  Ring r2 = qring({"x", "y"});
  CHECK(krull_dimension(I(r2, {"x*y"})) == 1);
  Ideal twisted = I(r, {"x*z - y^2", "y*z - x^2"});
  CHECK(krull_dimension(twisted) == krull_dimension(leading_term_ideal(twisted)));
}

TEST_CASE("monomial krull dimension against the subset oracle") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> e(0, 2);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = 2 + trial % 4;
    std::vector<std::vector<int>> gens;
    std::vector<Monomial> mons;
    for (int g = 0; g < 1 + trial % 4; ++g) {
      std::vector<int> x(n);
      for (auto& v : x) v = e(rng);
      gens.push_back(x);
      mons.emplace_back(x);
    }
    CHECK(monomial_krull_dimension(mons, n) == brute_force_monomial_dim(gens, n));
  }
}

TEST_CASE("artinian local algebras") {
  Ring t = qring({"t"});
  ArtinLocalAlgebra a = make_artin(t, parse_polynomials(t, {"t^3"}));
  CHECK(a.dim() == 3);
  CHECK(a.labels() == std::vector<std::string>{"1", "t", "t^2"});
  CHECK(a.nilpotency_index() == 3);

  ArtinLocalAlgebra dual = make_artin(t, parse_polynomials(t, {"t^2"}));
  CHECK(dual.dim() == 2);

  Ring xy = qring({"x", "y"});
  ArtinLocalAlgebra fat = make_artin(xy, parse_polynomials(xy, {"x^2", "x*y", "y^2"}));
  CHECK(fat.dim() == standard_monomials({{2, 0}, {1, 1}, {0, 2}}, 2, 4).size());
  CHECK(fat.nilpotency_index() == 2);
  CHECK(fat.power_dim(2) == 0);

  // Structure constants: commutative, associative, unital.
  const auto& tab = fat.mult_table();
  std::size_t n = fat.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      CHECK(tab[i][j] == tab[j][i]);
      for (std::size_t k = 0; k < n; ++k) {
        Vector left(n, 0), right(n, 0);
        for (std::size_t m = 0; m < n; ++m) {
          for (std::size_t o = 0; o < n; ++o) {
            left[o] += tab[i][j][m] * tab[m][k][o];
            right[o] += tab[j][k][m] * tab[i][m][o];
          }
        }
        CHECK(left == right);
      }
    }
    Vector ei(n, 0);
    ei[i] = 1;
    CHECK(tab[0][i] == ei);
  }

  Polynomial u = P(a.ring(), "1 + t");
  CHECK((a.inverse(u) * u).is_one());

  CHECK_THROWS_AS(make_artin(xy, parse_polynomials(xy, {"x^2"})), ValidationError);
  CHECK_THROWS_AS(make_artin(t, parse_polynomials(t, {"t^2 - t"})), ValidationError);
}

TEST_CASE("exact linear algebra") {
  Field q = Field::rationals();
  Matrix m = Matrix::from_rows(q, {{1, 2, 3}, {2, 4, 6}, {1, 0, 1}}, 3);
  CHECK(rank(m) == 2);
  auto ker = kernel(m);
  REQUIRE(ker.size() == 1);
  Vector zero(3, 0);
  CHECK(m * ker[0] == zero);
  auto sol = solve(m, Vector{6, 12, 2});
  REQUIRE(sol.has_value());
  CHECK(m * *sol == Vector{6, 12, 2});
  CHECK_FALSE(solve(m, Vector{1, 0, 0}).has_value());
}
