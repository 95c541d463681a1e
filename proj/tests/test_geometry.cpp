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

#include <algorithm>
#include <random>

#include "cjl/algebra/errors.hpp"
#include "cjl/dgla/resonance.hpp"
#include "cjl/geometry/analysis.hpp"
#include "cjl/geometry/chern.hpp"
#include "cjl/models/models.hpp"
#include "cjl/models/orlik_solomon.hpp"
#include "support.hpp"

using namespace cjl;
using namespace cjl::test;

namespace {

const Field kQ = Field::rationals();

// Generalized binomial coefficient C(e, n) for an integer e.
Rational binom(long e, long n) {
  Rational out = 1;
  for (long j = 0; j < n; ++j) out = out * Rational(e - j) / Rational(j + 1);
  return out;
}

// prod_k (1 - k t)^{e_k}, each factor expanded by the binomial series.
std::vector<Rational> binomial_product(const std::vector<std::pair<long, long>>& factors, std::size_t bound) {
  std::vector<Rational> c(bound + 1, Rational(0));
  c[0] = 1;
  for (const auto& [k, e] : factors) {
    std::vector<Rational> f(bound + 1);
    Rational pw = 1;
    for (std::size_t n = 0; n <= bound; ++n, pw *= -k) f[n] = binom(e, static_cast<long>(n)) * pw;
    std::vector<Rational> next(bound + 1, Rational(0));
    for (std::size_t i = 0; i <= bound; ++i)
      for (std::size_t j = 0; i + j <= bound; ++j) next[i + j] += c[i] * f[j];
    c = next;
  }
  return c;
}

DglaPair trivial_module_pair() {
  return DglaPair(exterior_pair(2).lie(), GradedSpace(0, {1, 1}), {}, {});
}

// The two-torus module moved up by one degree.
DglaPair shifted_torus() {
  DglaPair t2 = exterior_pair(2);
  return DglaPair(t2.lie(), GradedSpace(1, {1, 2, 1}), {}, t2.action_table());
}

DglaPair os3() {
  Arrangement arr;
  arr.normals = Matrix::from_rows(kQ, {{1, 0}, {0, 1}, {1, 1}}, 2);
  return cdga_to_pair(orlik_solomon(arr), 1, 1);
}

bool all_hold(const std::vector<Verdict>& vs) {
  return std::all_of(vs.begin(), vs.end(), [](const Verdict& v) { return v.holds; });
}

}  // namespace

TEST_CASE("chern exponents follow the b_{i+1-k} reading") {
  std::vector<long> b{1, 2, 1};
  CHECK(chern_exponent(b, 1, 1) == -2);
  CHECK(chern_exponent(b, 1, 2) == 1);
  CHECK(chern_exponent(b, 2, 3) == -1);
}

TEST_CASE("chern series examples") {
  ChernSeries c = chern_series({1, 2}, 1, 3);
  CHECK(c.coeffs == std::vector<Rational>{1, 0, -1, -2});
  ChernSeries z = chern_series({0, 0, 0}, 2, 4);
  CHECK(z.coeffs == std::vector<Rational>{1, 0, 0, 0, 0});
}

TEST_CASE("chern series against the binomial oracle and the log-derivative path") {
  std::mt19937_64 rng(29);
  std::uniform_int_distribution<long> betti(0, 5);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<long> b(5);
    for (auto& v : b) v = betti(rng);
    for (int i = 0; i < 4; ++i) {
      std::vector<std::pair<long, long>> factors;
      for (int k = 1; k <= i + 1; ++k) {
        long e = (i + 1 - k) < 5 ? b[static_cast<std::size_t>(i + 1 - k)] : 0;
        factors.push_back({k, k % 2 ? -e : e});
      }
      ChernSeries c = chern_series(b, i, 6);
      CHECK(c.coeffs == binomial_product(factors, 6));
      CHECK(c.coeffs == chern_series_logderiv(b, i, 6).coeffs);
      std::reverse(factors.begin(), factors.end());
      CHECK(c.coeffs == binomial_product(factors, 6));
      for (const auto& x : c.coeffs) CHECK(x.get_den() == 1);
    }
  }
}

TEST_CASE("euler characteristic gate") {
  CHECK(euler_chi({1, 2, 1}, 2) == 0);
  CHECK(euler_chi({1, 4, 1}, 1) == 3);
  CHECK_THROWS_AS(gated_chern_series({1, 2, 1}, 1, 2, 3), ValidationError);
  CHECK(gated_chern_series({1, 4, 1}, 0, 1, 4).coeffs.size() == 4);
}

TEST_CASE("schur values") {
  ChernSeries c = chern_series({1, 2}, 1, 3);
  CHECK(schur_value(c, {1}) == c.coeffs[1]);
  CHECK(schur_value(c, {2}) == c.coeffs[2]);
  CHECK(schur_value(c, {1, 1}) == c.coeffs[1] * c.coeffs[1] - c.coeffs[2]);
  CHECK(schur_nonnegativity(c, 1).empty());
  auto vs = schur_nonnegativity(c, 3);
  REQUIRE(vs.size() == 3);
  CHECK(vs[0].id == "9.1l:i=1:w=1:lambda=(1)");
  CHECK(vs[1].id == "9.1l:i=1:w=2:lambda=(1,1)");
  CHECK(vs[2].id == "9.1l:i=1:w=2:lambda=(2)");
  CHECK(vs[1].holds);
  CHECK_FALSE(vs[2].holds);
  CHECK(partitions(4).size() == 5);
  CHECK(partitions(0).empty());
}

TEST_CASE("generic ranks") {
  UniversalAomoto t2 = universal_aomoto(exterior_pair(2));
  GenericRanks r = generic_ranks(t2);
  CHECK(r.b == std::vector<std::size_t>{1, 2, 1});
  CHECK(r.beta_at(0) == 1);
  CHECK(r.beta_at(1) == 1);
  CHECK(r.beta_at(2) == 0);

  UniversalAomoto z = universal_aomoto(trivial_module_pair());
  GenericRanks rz = generic_ranks(z);
  for (int i = z.lo(); i <= z.hi(); ++i) CHECK(rz.beta_at(i) == 0);

  UniversalAomoto line = universal_aomoto(exterior_pair(1));
  CHECK(generic_ranks(line).beta_at(0) == std::min(line.betti(0), line.betti(1)));

  Ring r2 = qring({"x", "y"});
  PolyMatrix m = PolyMatrix::from_rows(r2, {parse_polynomials(r2, {"x", "y"}), parse_polynomials(r2, {"x^2", "x*y"})}, 2);
  CHECK(bareiss_rank(m) == 1);
  CHECK(generic_rank(m, Ideal::zero(r2)) == 1);
  CHECK(generic_rank(m, I(r2, {"x"})) == 1);
  CHECK(generic_rank(m, I(r2, {"x", "y"})) == 0);
}

TEST_CASE("exactness threshold") {
  for (std::size_t n : {1u, 2u, 3u}) {
    UniversalAomoto u = universal_aomoto(exterior_pair(n));
    CHECK(exactness_threshold(u, generic_ranks(u)) == static_cast<int>(n));
  }
  UniversalAomoto z = universal_aomoto(trivial_module_pair());
  CHECK(exactness_threshold(z, generic_ranks(z)) == 0);

  UniversalAomoto s = universal_aomoto(shifted_torus());
  CHECK(exactness_threshold(s, generic_ranks(s)) == 3);

  DglaPair empty(exterior_pair(2).lie(), GradedSpace(0, {0}), {}, {});
  UniversalAomoto e = universal_aomoto(empty);
  CHECK_THROWS_AS(exactness_threshold(e, generic_ranks(e)), ValidationError);
}

TEST_CASE("fitting loci") {
  UniversalAomoto u = universal_aomoto(exterior_pair(2));
  GenericRanks r = generic_ranks(u);
  const Ring& s = u.cone.s;
  CHECK(ideal_equal(fitting_locus(u, r, 1, 1), I(s, {"x0", "x1"})));
  CHECK(fitting_locus(u, r, 1, 2).is_unit());
  CHECK(fitting_locus(u, r, 0, 5).is_unit());

  for (std::size_t n : {2u, 3u}) {
    UniversalAomoto v = universal_aomoto(exterior_pair(n));
    GenericRanks rv = generic_ranks(v);
    for (int i = 0; i < static_cast<int>(n); ++i) {
      Ideal fit = fitting_locus(v, rv, i, 1);
      Ideal res = resonance_ideal(v, i, 1);
      CHECK(projectively_contained(fit, res));
      CHECK(projectively_contained(res, fit));
    }
  }
}

TEST_CASE("containment of loci") {
  Ring s = qring({"x0", "x1"});
  Ideal a = I(s, {"x0", "x1"}), b = I(s, {"x0^2", "x0*x1", "x1^2"});
  CHECK(affinely_contained(a, b));
  CHECK(affinely_contained(b, a));
  CHECK(affinely_contained(a, a));
  CHECK(affinely_contained(Ideal::unit(s), a));
  CHECK_FALSE(affinely_contained(I(s, {"x0"}), a));
  CHECK(projectively_contained(a, I(s, {"x0"})));
  CHECK_FALSE(projectively_contained(I(s, {"x0"}), a));
  CHECK(projectively_contained(a, Ideal::unit(s)));
  CHECK_FALSE(affinely_contained(a, Ideal::unit(s)));
  CHECK_FALSE(projectively_contained(I(s, {"x0"}), I(s, {"x1"})));

  UniversalAomoto u = universal_aomoto(exterior_pair(2));
  CHECK(all_hold(verify_inclusions(u, 2)));
}

TEST_CASE("codimension bounds") {
  UniversalAomoto u = universal_aomoto(exterior_pair(2));
  GenericRanks r = generic_ranks(u);
  ProjectiveCodim q = projective_codim(u.cone, resonance_ideal(u, 1, 1));
  CHECK(q.empty);
  CHECK(q.codim == 2);
  CHECK(cm_certified(u.cone));
  CHECK(codimension(u.cone, Ideal::zero(u.cone.s)) == 0);
  CHECK(all_hold(verify_codim_bounds(u, r, 2)));

  UniversalAomoto o = universal_aomoto(os3());
  GenericRanks ro = generic_ranks(o);
  int a = exactness_threshold(o, ro);
  auto vs = verify_codim_bounds(o, ro, a);
  CHECK_FALSE(vs.empty());
  CHECK(all_hold(vs));
}

TEST_CASE("binomial bounds") {
  for (std::size_t n : {2u, 3u}) {
    UniversalAomoto u = universal_aomoto(exterior_pair(n));
    GenericRanks r = generic_ranks(u);
    CHECK(all_hold(binomial_bound(r, static_cast<int>(n), true)));
  }
  GenericRanks none;
  CHECK(all_hold(binomial_bound(none, 0, true)));

  GenericRanks bad;
  bad.b = {1, 1, 1};
  bad.beta = {1, 0, 0};
  auto vs = binomial_bound(bad, 2, true);
  CHECK_FALSE(all_hold(vs));
}

TEST_CASE("tor crosscheck") {
  UniversalAomoto u = universal_aomoto(exterior_pair(2));
  GenericRanks r = generic_ranks(u);
  int a = exactness_threshold(u, r);
  Vector eta{1, 0};
  TorComparison t0 = tor_crosscheck(u, a, eta, 0);
  std::size_t top = u.betti(a) - rank(u.phi_at(a - 1).evaluate(eta));
  CHECK(t0.left == top);
  CHECK(t0.right == top);
  for (int i = 1; i <= a; ++i) {
    TorComparison t = tor_crosscheck(u, a, eta, i);
    CHECK(t.left == 0);
    CHECK(t.right == 0);
  }
  CHECK_THROWS_AS(tor_crosscheck(u, a, {0, 0}, 0), ValidationError);

  UniversalAomoto o = universal_aomoto(os3());
  GenericRanks ro = generic_ranks(o);
  int ao = exactness_threshold(o, ro);
  // A point on the local component x0 + x1 + x2 = 0.
  Vector on{1, 1, -2};
  std::size_t positive = 0;
  for (int i = 0; i <= ao; ++i) {
    TorComparison t = tor_crosscheck(o, ao, on, i);
    CHECK(t.left == t.right);
    positive += t.left;
  }
  CHECK(positive > 0);
}

TEST_CASE("analyze reports") {
  for (const DglaPair& p : {exterior_pair(2), exterior_pair(3), surface_pair(2), os3()}) {
    ResonanceReport rep = analyze(p);
    std::vector<long> b(rep.ranks.b.begin(), rep.ranks.b.end());
    CHECK(rep.chi_a == euler_chi(b, rep.a));
    for (int i = rep.ranks.lo; i < rep.a; ++i)
      CHECK(rep.ranks.b_at(i) == rep.ranks.beta_at(i) + rep.ranks.beta_at(i - 1));
    for (const auto& v : rep.claims) {
      INFO(v.id << " " << v.witness);
      CHECK(v.holds);
    }
    CHECK(std::find(rep.flags.begin(), rep.flags.end(), "cm_assumed") == rep.flags.end());
    for (const auto& [i, cs] : rep.chern) {
      CHECK(cs.coeffs.front() == 1);
      CHECK(cs.coeffs == chern_series_logderiv(b, i, cs.coeffs.size() - 1).coeffs);
    }
    CHECK(rep.chern.empty() == (rep.chi_a == 0));
  }

  ResonanceReport t2 = analyze(exterior_pair(2));
  CHECK(t2.a == 2);
  CHECK(std::find(t2.flags.begin(), t2.flags.end(), "chi_a_zero") != t2.flags.end());

  ResonanceReport s = analyze(surface_pair(2));
  CHECK(s.a == 1);
  CHECK(s.chi_a == 3);
  REQUIRE(s.chern.count(0) == 1);
  CHECK(s.chern.at(0).coeffs == std::vector<Rational>{1, 1, 1, 1});
}

TEST_CASE("non-polynomial cone carries the cm flag") {
  ResonanceReport rep = analyze(exterior_pair(2, 2));
  UniversalAomoto u = universal_aomoto(exterior_pair(2, 2));
  CHECK_FALSE(u.cone.ideal.is_zero());
  CHECK(cm_certified(u.cone) == (u.cone.ideal.groebner().size() <= 1));
  if (!cm_certified(u.cone)) CHECK(std::find(rep.flags.begin(), rep.flags.end(), "cm_assumed") != rep.flags.end());
  for (int i = rep.ranks.lo; i < rep.a; ++i)
    CHECK(rep.ranks.b_at(i) == rep.ranks.beta_at(i) + rep.ranks.beta_at(i - 1));
}
