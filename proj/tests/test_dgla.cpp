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

#include <random>

#include "cjl/acceptance/fixtures.hpp"
#include "cjl/algebra/errors.hpp"
#include "cjl/complexes/jump.hpp"
#include "cjl/dgla/aomoto.hpp"
#include "cjl/dgla/augmentation.hpp"
#include "cjl/dgla/checks.hpp"
#include "cjl/dgla/cohomology.hpp"
#include "cjl/dgla/pair_map.hpp"
#include "cjl/dgla/resonance.hpp"
#include "cjl/dgla/tensor.hpp"
#include "cjl/models/cdga.hpp"
#include "cjl/models/models.hpp"
#include "support.hpp"

using namespace cjl;
using namespace cjl::test;

namespace {

const Field kQ = Field::rationals();

Dgla gl2_dgla() {
  LieAlgebra g = gl_algebra(2);
  return Dgla(kQ, GradedSpace(0, {g.dim}, g.labels), {}, g.bracket);
}

// C^1 = span(e1, e2), C^2 = span(f1, f2), d e1 = f1, [e1, e2] = f2.
Dgla small_curved_dgla() {
  Matrix d(kQ, 2, 2);
  d(0, 0) = 1;
  StructureConstants br;
  br[{0, 1}] = {{3, Rational(1)}};
  br[{1, 0}] = {{3, Rational(1)}};
  return Dgla(kQ, GradedSpace(1, {2, 2}, {"e1", "e2", "f1", "f2"}), {d}, br);
}

ArtinLocalAlgebra point_algebra() {
  Ring k = RingContext::make(kQ, std::vector<std::string>{});
  return make_artin(k, {});
}

std::size_t rank_nullity(const GradedSpace& s, const std::vector<Matrix>& d, int i) {
  auto r = [&](int j) -> std::size_t {
    if (j < s.lo() || j >= s.hi()) return 0;
    return rank(d[static_cast<std::size_t>(j - s.lo())]);
  };
  return s.dim(i) - r(i) - r(i - 1);
}

Elem unit_elem(const Ring& ring, std::size_t size, std::size_t at, const Polynomial& c) {
  Elem e = zero_elem(ring, size);
  e[at] = c;
  return e;
}

}  // namespace

TEST_CASE("dgla axiom checker") {
  Dgla abelian(kQ, GradedSpace(0, {2, 1}), {}, {});
  CHECK(check_dgla(abelian).ok());
  CHECK(check_dgla(gl2_dgla()).ok());

  LieAlgebra g = gl_algebra(2);
  auto broken = g.bracket;
  broken[{0, 1}] = {{1, Rational(2)}};
  Dgla bad(kQ, GradedSpace(0, {g.dim}, g.labels), {}, broken);
  AxiomReport rep = check_dgla(bad);
  REQUIRE_FALSE(rep.ok());
  CHECK_FALSE(rep.violations.front().witness.empty());
  CHECK_THROWS_AS(require_valid(rep, "gl2"), ValidationError);
}

TEST_CASE("pair axiom checker") {
  Dgla g = gl2_dgla();
  DglaPair adjoint(g, g.space(), {}, g.bracket_table());
  CHECK(check_pair(adjoint).ok());

  DglaPair fixture = nonabelian_fixture();
  const Dgla& c = fixture.lie();
  DglaPair self(c, c.space(), c.d(), c.bracket_table());
  CHECK(check_pair(self).ok());
  CHECK(check_pair(fixture).ok());

  StructureConstants act = fixture.action_table();
  act.begin()->second.front().second += 1;
  DglaPair perturbed(c, fixture.module(), fixture.dm(), act);
  AxiomReport rep = check_pair(perturbed);
  REQUIRE_FALSE(rep.ok());
  CHECK_FALSE(rep.violations.front().witness.empty());
}

TEST_CASE("cohomology pair") {
  DglaPair t2 = exterior_pair(2);
  CohomologyPair h = cohomology_pair(t2);
  CHECK(h.pair.lie().space().dims() == t2.lie().space().dims());
  CHECK(h.pair.module().dims() == t2.module().dims());

  DglaPair acyclic = acyclic_pair(kQ, 0);
  CohomologyPair z = cohomology_pair(acyclic);
  CHECK(z.pair.lie().space().total() == 0);
  CHECK(z.pair.module().total() == 0);

  for (const DglaPair& p : {nonabelian_fixture(), acyclic_pair(kQ, 1), exterior_pair(2, 2)}) {
    CohomologyPair cp = cohomology_pair(p);
    const GradedSpace& c = p.lie().space();
    const GradedSpace& m = p.module();
    for (int i = c.lo(); i <= c.hi(); ++i) CHECK(cp.pair.lie().space().dim(i) == rank_nullity(c, p.lie().d(), i));
    for (int i = m.lo(); i <= m.hi(); ++i) CHECK(cp.pair.module().dim(i) == rank_nullity(m, p.dm(), i));
    CHECK(check_dgla(cp.pair.lie()).ok());
    CHECK(check_pair(cp.pair).ok());
    CHECK(cp.pair.has_zero_differentials());
  }
}

TEST_CASE("maurer-cartan over square-zero and deeper algebras") {
  Dgla c = small_curved_dgla();
  REQUIRE(check_dgla(c).ok());
  ArtinLocalAlgebra dual = truncated_line(2);
  const Ring& r = dual.ring();
  Polynomial t = P(r, "t");
  std::size_t n = c.space().total();
  CHECK(maurer_cartan_check(c, dual, zero_elem(r, n)));
  CHECK(maurer_cartan_check(c, dual, unit_elem(r, n, 1, t)));
  CHECK_FALSE(maurer_cartan_check(c, dual, unit_elem(r, n, 0, t)));

  // Term-by-term oracle over Q[t]/(t^3): omega = t v + t^2 w is MC iff
  // dv = 0 and dw + [v, v]/2 = 0.
  ArtinLocalAlgebra a = truncated_line(3);
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> coef(-1, 1);
  int mc_count = 0;
  for (int trial = 0; trial < 40; ++trial) {
    Vector v(n, Rational(0)), w(n, Rational(0));
    for (std::size_t l = 0; l < 2; ++l) {
      v[l] = coef(rng);
      w[l] = coef(rng);
    }
    Vector t2 = c.diff(w);
    Vector br = c.bracket(v, v);
    for (std::size_t k = 0; k < n; ++k) t2[k] += br[k] / 2;
    bool expected = c.diff(v) == Vector(n, Rational(0)) && t2 == Vector(n, Rational(0));
    Elem omega = zero_elem(a.ring(), n);
    for (std::size_t l = 0; l < n; ++l) omega[l] = P(a.ring(), "t") * v[l] + P(a.ring(), "t^2") * w[l];
    CHECK(maurer_cartan_check(c, a, omega) == expected);
    mc_count += expected;
  }
  CHECK(mc_count > 0);
  CHECK(mc_count < 40);

  Elem with_unit = unit_elem(a.ring(), n, 1, a.one());
  CHECK_THROWS_AS(maurer_cartan_check(c, a, with_unit), ValidationError);
}

TEST_CASE("nonabelian bracket enters the MC equation at order two") {
  DglaPair p = exterior_pair(2, 2);
  const Dgla& c = p.lie();
  ArtinLocalAlgebra a = truncated_line(3);
  const GradedSpace& s = c.space();
  Polynomial t = P(a.ring(), "t");
  // e1 (x) E12 + e2 (x) E21: bracket is 2 e1e2 (x) (E11 - E22) != 0.
  Elem omega = zero_elem(a.ring(), s.total());
  omega[s.global(1, 1)] = t;
  omega[s.global(1, 4 + 2)] = t;
  CHECK_FALSE(maurer_cartan_check(c, a, omega));
  CHECK(maurer_cartan_check(c, truncated_line(2), zero_elem(truncated_line(2).ring(), s.total())));
  Elem commuting = zero_elem(a.ring(), s.total());
  commuting[s.global(1, 0)] = t;
  commuting[s.global(1, 4 + 0)] = t * 3;
  CHECK(maurer_cartan_check(c, a, commuting));
}

TEST_CASE("gauge action") {
  ArtinLocalAlgebra a = truncated_line(4);
  const Ring& r = a.ring();
  std::mt19937_64 rng(9);
  DglaPair p = nonabelian_fixture();
  const Dgla& c = p.lie();
  std::size_t n = c.space().total();
  for (int trial = 0; trial < 10; ++trial) {
    Elem omega = random_elem(c.space(), 1, a, rng);
    CHECK(gauge_act(c, a, zero_elem(r, n), omega) == omega);
    Elem lambda = random_elem(c.space(), 0, a, rng);
    Elem moved = gauge_act(c, a, lambda, omega);
    Elem back = gauge_act(c, a, elem_scale(lambda, Rational(-1)), moved);
    CHECK(back == omega);
  }

  DglaPair ac = acyclic_pair(kQ, 0);
  Polynomial t = P(r, "t");
  Elem lambda = unit_elem(r, 2, 0, t);
  Elem omega = unit_elem(r, 2, 1, t * t);
  CHECK(gauge_act(ac.lie(), a, lambda, omega) == elem_sub(omega, ac.lie().diff(lambda)));
}

TEST_CASE("module transport identities") {
  ArtinLocalAlgebra a = truncated_line(4);
  std::mt19937_64 rng(13);
  DglaPair p = nonabelian_fixture();
  const GradedSpace& m = p.module();
  Elem xi0 = random_elem(m, 0, a, rng, 0);
  CHECK(module_transport(p, a, zero_elem(a.ring(), p.lie().space().total()), xi0) == xi0);
  for (int trial = 0; trial < 20; ++trial) {
    Elem lambda = random_elem(p.lie().space(), 0, a, rng);
    Elem omega = random_elem(p.lie().space(), 1, a, rng);
    Elem xi = random_elem(m, trial % 2, a, rng, 0);
    CHECK(transport_product_identity(p, a, lambda, omega, xi).holds());
    CHECK(transport_differential_identity(p, a, lambda, xi).holds());
  }
}

TEST_CASE("aomoto complexes") {
  DglaPair t2 = exterior_pair(2);
  ArtinLocalAlgebra dual = truncated_line(2);
  const Ring& r = dual.ring();
  std::size_t n = t2.lie().space().total();

  FreeComplex zero = aomoto_complex(t2, dual, zero_elem(r, n));
  for (int i = 0; i < 2; ++i) CHECK(zero.diff(i) == PolyMatrix::from_matrix(r, t2.module_diff_matrix(i)));

  ArtinLocalAlgebra point = point_algebra();
  DglaPair fixture = nonabelian_fixture();
  FreeComplex plain = aomoto_complex(fixture, point, zero_elem(point.ring(), fixture.lie().space().total()));
  CHECK(plain.diff(0).evaluate({}) == fixture.module_diff_matrix(0));

  // omega = eps*e1: 1 -> eps e1, e1 -> 0, e2 -> eps e1e2.
  Elem omega = unit_elem(r, n, 1, P(r, "t"));
  FreeComplex e = aomoto_complex(t2, dual, omega);
  CHECK(e.diff(0).to_strings() == std::vector<std::vector<std::string>>{{"t"}, {"0"}});
  CHECK(e.diff(1).to_strings() == std::vector<std::vector<std::string>>{{"0", "t"}});
  CHECK(squares_to_zero(e));

  Dgla c = small_curved_dgla();
  DglaPair curved(c, GradedSpace(0, {1}), {}, {});
  CHECK_THROWS_AS(aomoto_complex(curved, dual, unit_elem(r, c.space().total(), 0, P(r, "t"))), ValidationError);
}

TEST_CASE("def jump tests") {
  ArtinLocalAlgebra point = point_algebra();
  DglaPair t2 = exterior_pair(2);
  Elem zero = zero_elem(point.ring(), t2.lie().space().total());
  std::vector<std::size_t> b{1, 2, 1};
  for (int i = 0; i <= 2; ++i)
    for (int k = 1; k <= 3; ++k) CHECK(def_jump_test(t2, point, zero, i, k) == (b[i] >= static_cast<std::size_t>(k)));
  CHECK_FALSE(def_jump_test(t2, point, zero, 1, 3));

  // Along the arc x = (eps, 0): R^1_1 = (x0^2, x0 x1, x1^2) vanishes, R^1_2 = (x0, x1) does not.
  ArtinLocalAlgebra dual = truncated_line(2);
  Elem omega = unit_elem(dual.ring(), t2.lie().space().total(), 1, P(dual.ring(), "t"));
  CHECK(def_jump_test(t2, dual, omega, 1, 1));
  CHECK_FALSE(def_jump_test(t2, dual, omega, 1, 2));
}

TEST_CASE("specialization of resonance ideals along A-points") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> coef(-2, 2);
  for (const DglaPair& p : {exterior_pair(2), exterior_pair(3), surface_pair(2), exterior_pair(2, 2)}) {
    UniversalAomoto u = universal_aomoto(p);
    const GradedSpace& h = u.pair.lie().space();
    for (int trial = 0; trial < 3; ++trial) {
      ArtinLocalAlgebra a = trial == 2 ? fat_point() : truncated_line(2);
      std::vector<Polynomial> images;
      Elem omega = zero_elem(a.ring(), h.total());
      for (std::size_t l = 0; l < h.dim(1); ++l) {
        Polynomial c = a.basis_element(1) * Rational(coef(rng));
        if (a.dim() > 2) c += a.basis_element(2) * Rational(coef(rng));
        images.push_back(c);
        omega[h.global(1, l)] = c;
      }
      RingMap phi{u.cone.s, a.ring(), images};
      FreeComplex e = aomoto_complex(u.pair, a, omega);
      for (int i = u.lo(); i <= u.hi(); ++i) {
        for (int k = 1; k <= 3; ++k) {
          CHECK(ideal_equal(extend_ideal(resonance_ideal(u, i, k), phi), jump_ideal(a, e, i, k)));
        }
      }
    }
  }
}

TEST_CASE("quadratic cone") {
  CHECK(quadratic_cone_ideal(exterior_pair(2).lie()).ideal.is_zero());

  StructureConstants br;
  br[{0, 1}] = {{2, Rational(1)}};
  br[{1, 0}] = {{2, Rational(1)}};
  Dgla c(kQ, GradedSpace(1, {2, 1}), {}, br);
  QuadraticCone q = quadratic_cone_ideal(c);
  CHECK(ideal_equal(q.ideal, Ideal(q.s, {P(q.s, "2*x0*x1")})));

  CHECK(quadratic_cone_ideal(nonabelian_fixture().lie()).ideal.is_zero());
}

TEST_CASE("flat connections") {
  CHECK(flat_connection_ideal(exterior_pair(2).lie()).ideal.is_zero());

  Dgla lin(kQ, GradedSpace(1, {2, 2}), {Matrix::identity(kQ, 2)}, {});
  FlatConnections f = flat_connection_ideal(lin);
  CHECK(ideal_equal(f.ideal, Ideal(f.ring, parse_polynomials(f.ring, {"x0", "x1"}))));

  Dgla c = exterior_pair(2, 2).lie();
  FlatConnections h = flat_connection_ideal(cohomology_dgla(c).dgla);
  QuadraticCone q = quadratic_cone_ideal(c);
  CHECK(h.ideal.canonical_strings() == q.ideal.canonical_strings());
  CHECK_FALSE(q.ideal.is_zero());
}

TEST_CASE("universal aomoto complex of the two-torus") {
  UniversalAomoto u = universal_aomoto(exterior_pair(2));
  CHECK(u.phi_at(0).to_strings() == std::vector<std::vector<std::string>>{{"x0"}, {"x1"}});
  CHECK(u.phi_at(1).to_strings() == std::vector<std::vector<std::string>>{{"-x1", "x0"}});

  GradedSpace zero_module(0, {0});
  DglaPair empty(exterior_pair(2).lie(), zero_module, {}, {});
  UniversalAomoto z = universal_aomoto(empty);
  CHECK(z.complex.rank(0) == 0);

  Dgla lie = exterior_pair(2).lie();
  DglaPair single(lie, GradedSpace(0, {1}), {}, {});
  UniversalAomoto s = universal_aomoto(single);
  CHECK(s.complex.ranks() == std::vector<std::size_t>{1});
}

TEST_CASE("resonance ideals") {
  DglaPair t2 = exterior_pair(2);
  UniversalAomoto u = universal_aomoto(t2);
  const Ring& s = u.cone.s;
  CHECK(ideal_equal(resonance_ideal(u, 1, 1), I(s, {"x0^2", "x0*x1", "x1^2"})));
  CHECK(ideal_equal(resonance_ideal(u, 1, 2), I(s, {"x0", "x1"})));
  CHECK(ideal_equal(resonance_ideal(u, 0, 1), I(s, {"x0", "x1"})));
  CHECK(resonance_ideal(u, 1, 6).is_unit());
  CHECK(ideal_equal(resonance_ideal(t2, 1, 1), resonance_ideal(u, 1, 1)));

  UniversalAomoto g = universal_aomoto(exterior_pair(2, 2));
  for (int i = g.lo(); i <= g.hi(); ++i) {
    for (int k = 1; k <= 3; ++k) {
      Ideal r = resonance_ideal(g, i, k);
      CHECK(r.contains(g.cone.ideal));
      CHECK(resonance_ideal(g, i, k + 1).contains(r));
    }
  }
}

TEST_CASE("pointwise resonance") {
  UniversalAomoto t2 = universal_aomoto(exterior_pair(2));
  for (int i = 0; i <= 2; ++i) CHECK(pointwise_resonance(t2, {0, 0}, i) == t2.betti(i));
  CHECK(pointwise_resonance(t2, {1, 0}, 1) == 0);

  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> coef(-1, 1);
  for (const DglaPair& p : {exterior_pair(3), surface_pair(2)}) {
    UniversalAomoto u = universal_aomoto(p);
    std::size_t n = u.cone.s->nvars();
    for (int trial = 0; trial < 12; ++trial) {
      Vector eta(n);
      for (auto& v : eta) v = coef(rng);
      for (int i = u.lo(); i <= u.hi(); ++i) {
        std::size_t rank = pointwise_resonance(u, eta, i);
        for (int k = 1; k <= 3; ++k) {
          Ideal r = resonance_ideal(u, i, k);
          bool vanishes = true;
          for (const auto& g : r.groebner()) vanishes = vanishes && g.evaluate(eta) == 0;
          CHECK(vanishes == (rank >= static_cast<std::size_t>(k)));
        }
      }
    }
  }

  UniversalAomoto g = universal_aomoto(exterior_pair(2, 2));
  Vector eta(g.cone.s->nvars(), Rational(0));
  eta[1] = 1;
  eta[4 + 2] = 1;
  REQUIRE_FALSE(in_quadratic_cone(g, eta));
  CHECK_THROWS_AS(pointwise_resonance(g, eta, 1), ValidationError);
}

TEST_CASE("augmented resonance") {
  DglaPair t2 = exterior_pair(2);
  Augmentation same;
  same.g_dim = 1;
  same.eps0 = Matrix::identity(kQ, 1);
  AugmentedResonance r = augmented_resonance(t2, same, 1, 1);
  CHECK(r.extra_variables == 0);
  CHECK(r.ideal.canonical_strings() == resonance_ideal(t2, 1, 1).canonical_strings());

  DglaPair padded = include_into_sum(include_into_sum(t2, acyclic_pair(kQ, 0)).target, acyclic_pair(kQ, 0)).target;
  Augmentation wide;
  wide.g_dim = 3;
  wide.eps0 = Matrix::identity(kQ, 3);
  for (int k = 1; k <= 2; ++k) {
    AugmentedResonance w = augmented_resonance(padded, wide, 1, k);
    Ideal base = resonance_ideal(padded, 1, k);
    CHECK(w.extra_variables == 2);
    CHECK(w.ring->nvars() == base.ring()->nvars() + 2);
    CHECK(w.ideal.canonical_strings() == base.canonical_strings());
    CHECK(krull_dimension(w.ideal) == krull_dimension(base) + 2);
  }

  Augmentation not_onto;
  not_onto.g_dim = 2;
  not_onto.eps0 = Matrix(kQ, 2, 1);
  CHECK_THROWS_AS(augmented_resonance(t2, not_onto, 1, 1), ValidationError);
}

TEST_CASE("pair map equivalence") {
  DglaPair p = exterior_pair(2);
  PairMap id{p, p, Matrix::identity(kQ, p.lie().space().total()), Matrix::identity(kQ, p.module().total())};
  CHECK(pair_map_equivalence(id, 5).holds);

  PairMap inc = include_into_sum(p, acyclic_pair(kQ, 1));
  CHECK(pair_map_equivalence(inc, 5).holds);

  PairMap kill{p, p, Matrix::identity(kQ, p.lie().space().total()), Matrix(kQ, p.module().total(), p.module().total())};
  EquivalenceVerdict v = pair_map_equivalence(kill, 1);
  CHECK_FALSE(v.holds);
  CHECK_FALSE(v.witness.empty());

  PairMap wrong{p, p, Matrix(kQ, 1, 1), id.g2};
  CHECK_THROWS_AS(check_pair_map(wrong), ValidationError);
}
