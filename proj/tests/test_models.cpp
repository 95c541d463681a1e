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

#include "cjl/algebra/errors.hpp"
#include "cjl/dgla/checks.hpp"
#include "cjl/dgla/resonance.hpp"
#include "cjl/models/cdga.hpp"
#include "cjl/models/models.hpp"
#include "cjl/models/orlik_solomon.hpp"
#include "support.hpp"

using namespace cjl;
using namespace cjl::test;

namespace {

const Field kQ = Field::rationals();

Arrangement arrangement(const std::vector<Vector>& rows, std::size_t ell) {
  Arrangement a;
  a.normals = Matrix::from_rows(kQ, rows, ell);
  return a;
}

Arrangement braid_a3() {
  std::vector<Vector> rows;
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      Vector v(4, Rational(0));
      v[static_cast<std::size_t>(i)] = 1;
      v[static_cast<std::size_t>(j)] = -1;
      rows.push_back(v);
    }
  }
  return arrangement(rows, 4);
}

std::vector<std::size_t> dims(const Cdga& a) { return a.space.dims(); }

}  // namespace

TEST_CASE("exterior algebras") {
  Cdga l3 = exterior_algebra(3);
  CHECK(dims(l3) == std::vector<std::size_t>{1, 3, 3, 1});
  CHECK(check_cdga(l3).ok());
  CHECK(l3.space.label(4) == "e1e2");
  Vector e1(8, Rational(0)), e2(8, Rational(0));
  e1[1] = 1;
  e2[2] = 1;
  Vector e12 = l3.multiply(e1, e2), e21 = l3.multiply(e2, e1);
  CHECK(e12[4] == 1);
  CHECK(e21[4] == -1);
  CHECK(l3.multiply(e1, e1) == Vector(8, Rational(0)));
}

TEST_CASE("exterior pairs") {
  DglaPair p1 = exterior_pair(1);
  CHECK(p1.module().dims() == std::vector<std::size_t>{1, 1});
  UniversalAomoto u = universal_aomoto(p1);
  CHECK(u.phi_at(0).to_strings() == std::vector<std::vector<std::string>>{{"x0"}});
  CHECK(ideal_equal(resonance_ideal(u, 0, 1), I(u.cone.s, {"x0"})));

  DglaPair p2 = exterior_pair(2);
  CHECK(p2.lie().is_abelian());
  CHECK(check_pair(p2).ok());
  CHECK(check_dgla(p2.lie()).ok());
}

TEST_CASE("orlik-solomon examples") {
  Cdga generic = orlik_solomon(arrangement({{1, 0}, {0, 1}}, 2));
  CHECK(generic.betti() == std::vector<std::size_t>{1, 2, 1});

  Arrangement three = arrangement({{1, 0}, {0, 1}, {1, 1}}, 2);
  CHECK(circuits(three) == std::vector<std::vector<std::size_t>>{{0, 1, 2}});
  Cdga os = orlik_solomon(three);
  CHECK(os.betti() == std::vector<std::size_t>{1, 3, 2});
  CHECK(nbc_betti(three) == std::vector<std::size_t>{1, 3, 2});
  CHECK(check_cdga(os).ok());

  Cdga boolean = orlik_solomon(arrangement({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, 3));
  Cdga ext = exterior_algebra(3);
  CHECK(dims(boolean) == dims(ext));
  CHECK(boolean.mult == ext.mult);
}

TEST_CASE("orlik-solomon betti numbers against the NBC count and the braid arrangement") {
  Arrangement a3 = braid_a3();
  // Poincare polynomial (1 + t)(1 + 2t)(1 + 3t).
  CHECK(nbc_betti(a3) == std::vector<std::size_t>{1, 6, 11, 6});
  Cdga os = orlik_solomon(a3);
  CHECK(os.betti() == std::vector<std::size_t>{1, 6, 11, 6});
  CHECK(check_cdga(os).ok());

  Arrangement generic4 = arrangement({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}}, 3);
  CHECK(orlik_solomon(generic4).betti() == nbc_betti(generic4));
  CHECK(nbc_betti(generic4) == std::vector<std::size_t>{1, 4, 6, 3});
}

TEST_CASE("deleting a hyperplane never increases b1") {
  std::vector<Arrangement> corpus{braid_a3(), arrangement({{1, 0}, {0, 1}, {1, 1}, {1, -1}}, 2),
                                  arrangement({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}}, 3)};
  for (const auto& arr : corpus) {
    std::size_t b1 = orlik_solomon(arr).betti()[1];
    for (std::size_t drop = 0; drop < arr.normals.rows(); ++drop) {
      std::vector<Vector> rows;
      for (std::size_t r = 0; r < arr.normals.rows(); ++r)
        if (r != drop) rows.push_back(arr.normals.row(r));
      Cdga smaller = orlik_solomon(arrangement(rows, arr.normals.cols()));
      CHECK(smaller.betti()[1] <= b1);
    }
  }
}

TEST_CASE("arrangement validation") {
  CHECK_THROWS_AS(orlik_solomon(arrangement({{1, 0}, {0, 0}}, 2)), ValidationError);
  CHECK_THROWS_AS(orlik_solomon(arrangement({{1, 2}, {-2, -4}}, 2)), ValidationError);
  std::vector<Vector> many;
  for (int i = 1; i <= 13; ++i) many.push_back({1, Rational(i)});
  CHECK_THROWS_AS(orlik_solomon(arrangement(many, 2)), ValidationError);
  CHECK_NOTHROW(validate_arrangement(arrangement(many, 2), 13));
}

TEST_CASE("cdga to pair") {
  Cdga l1 = exterior_algebra(1);
  DglaPair r1 = cdga_to_pair(l1, 1, 1);
  CHECK(r1.lie().is_abelian());
  CHECK(r1.lie().space().dims() == l1.space.dims());
  CHECK(r1.module().dims() == l1.space.dims());

  DglaPair r2 = cdga_to_pair(l1, 2, 2);
  CHECK(check_dgla(r2.lie()).ok());
  CHECK(check_pair(r2).ok());
  CHECK(r2.lie().space().dim(1) == l1.space.dim(1) * 4);
  CHECK_FALSE(r2.lie().is_abelian());

  DglaPair rect = cdga_to_pair(exterior_algebra(2), 2, 3);
  CHECK(check_pair(rect).ok());
  CHECK(rect.module().dim(1) == 2 * 6);
}

TEST_CASE("surface pairs") {
  Cdga s1 = surface_algebra(1);
  CHECK(s1.betti() == std::vector<std::size_t>{1, 2, 1});
  DglaPair torus = surface_pair(1);
  DglaPair ext = exterior_pair(2);
  UniversalAomoto us = universal_aomoto(torus), ue = universal_aomoto(ext);
  for (int i = 0; i <= 2; ++i)
    for (int k = 1; k <= 3; ++k)
      CHECK(resonance_ideal(us, i, k).canonical_strings() == resonance_ideal(ue, i, k).canonical_strings());

  for (std::size_t g : {2u, 3u}) {
    Cdga s = surface_algebra(g);
    CHECK(s.betti() == std::vector<std::size_t>{1, 2 * g, 1});
    CHECK(check_cdga(s).ok());
  }
  UniversalAomoto u2 = universal_aomoto(surface_pair(2));
  CHECK(u2.cone.s->nvars() == 4);
  CHECK(u2.cone.ideal.is_zero());
}

TEST_CASE("every model pair passes the axiom checks") {
  Arrangement three = arrangement({{1, 0}, {0, 1}, {1, 1}}, 2);
  std::vector<DglaPair> pairs{exterior_pair(1),           exterior_pair(3),   exterior_pair(2, 2),
                              surface_pair(2),            nonabelian_fixture(), cdga_to_pair(orlik_solomon(three), 1, 1),
                              cdga_to_pair(orlik_solomon(three), 2, 1)};
  for (const auto& p : pairs) {
    CHECK(check_dgla(p.lie()).ok());
    CHECK(check_pair(p).ok());
    UniversalAomoto u = universal_aomoto(p);
    for (int i = u.lo(); i + 1 < u.hi(); ++i) {
      PolyMatrix sq = u.phi_at(i + 1) * u.phi_at(i);
      for (std::size_t r = 0; r < sq.rows(); ++r)
        for (std::size_t c = 0; c < sq.cols(); ++c) CHECK(u.cone.ideal.contains(sq(r, c)));
    }
  }
}
