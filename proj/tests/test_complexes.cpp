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
#include <numeric>
#include <random>

#include "cjl/acceptance/fixtures.hpp"
#include "cjl/algebra/artin.hpp"
#include "cjl/algebra/errors.hpp"
#include "cjl/complexes/determinantal.hpp"
#include "cjl/complexes/equivalence.hpp"
#include "cjl/complexes/free_complex.hpp"
#include "cjl/complexes/jump.hpp"
#include "support.hpp"

using namespace cjl;
using namespace cjl::test;

namespace {

PolyMatrix mat(const Ring& r, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::vector<Polynomial>> p;
  for (const auto& row : rows) p.push_back(parse_polynomials(r, row));
  return PolyMatrix::from_rows(r, p, rows.empty() ? 0 : rows[0].size());
}

// Leibniz formula over all permutations.
Polynomial leibniz(const PolyMatrix& m) {
  std::vector<std::size_t> perm(m.rows());
  std::iota(perm.begin(), perm.end(), 0);
  Polynomial sum(m.ring());
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
      for (std::size_t j = i + 1; j < perm.size(); ++j) inversions += perm[i] > perm[j];
    Polynomial term = Polynomial::constant(m.ring(), inversions % 2 ? -1 : 1);
    for (std::size_t i = 0; i < perm.size(); ++i) term = term * m(i, perm[i]);
    sum += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return sum;
}

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + static_cast<long>(k), true);
  do {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i)
      if (pick[i]) s.push_back(i);
    out.push_back(s);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

FreeComplex line_complex(const Ring& r, const std::string& entry) {
  return FreeComplex(r, 0, {1, 1}, {mat(r, {{entry}})});
}

}  // namespace

TEST_CASE("determinantal ideal examples") {
  Ring r = qring({"x", "y", "z", "w"});
  PolyMatrix m = mat(r, {{"x", "y"}, {"z", "w"}});
  CHECK(ideal_equal(determinantal_ideal(m, 2), I(r, {"x*w - y*z"})));
  CHECK(determinantal_ideal(m, 0).is_unit());
  CHECK(determinantal_ideal(m, -1).is_unit());
  CHECK(determinantal_ideal(m, 3).is_zero());
  CHECK(determinant(m) == P(r, "x*w - y*z"));
}

TEST_CASE("minors agree with a brute-force Leibniz enumeration") {
  Ring r = qring({"a", "b", "c", "d", "e", "f", "g", "h", "k"});
  PolyMatrix g = mat(r, {{"a", "b", "c"}, {"d", "e", "f"}});
  std::vector<Polynomial> expected;
  for (const auto& rows : subsets(2, 2))
    for (const auto& cols : subsets(3, 2)) expected.push_back(leibniz(g.submatrix(rows, cols)));
  CHECK(minors(g, 2) == expected);

  PolyMatrix sq = mat(r, {{"a", "b", "c"}, {"d", "e", "f"}, {"g", "h", "k"}});
  CHECK(determinant(sq) == leibniz(sq));
  std::vector<Polynomial> two;
  for (const auto& rows : subsets(3, 2))
    for (const auto& cols : subsets(3, 2)) two.push_back(leibniz(sq.submatrix(rows, cols)));
  CHECK(minors(sq, 2) == two);
}

TEST_CASE("determinantal ideals shrink as the minor size grows") {
  Ring r = qring({"x", "y", "z"});
  PolyMatrix m = mat(r, {{"x", "y", "0"}, {"z", "x + y", "y^2"}, {"x*z", "0", "z"}});
  for (int k = 1; k <= 4; ++k) CHECK(determinantal_ideal(m, k - 1).contains(determinantal_ideal(m, k)));
}

TEST_CASE("block diagonal determinantal ideals") {
  Ring r = qring({"x", "y"});
  PolyMatrix a = mat(r, {{"x"}}), b = mat(r, {{"y"}});
  CHECK(ideal_equal(block_diag_determinantal(a, b, 2), I(r, {"x*y"})));
  CHECK(ideal_equal(block_diag_determinantal(a, b, 1), I(r, {"x", "y"})));

  PolyMatrix d0 = mat(r, {{"x"}, {"y"}});
  PolyMatrix d1 = mat(r, {{"-y", "x"}});
  Ideal expected = I(r, {"x^2", "x*y", "y^2"});
  CHECK(ideal_equal(block_diag_determinantal(d0, d1, 2), expected));
  CHECK(ideal_equal(block_diag_determinantal_direct(d0, d1, 2), expected));
  PolyMatrix big = block_diag(d0, d1);
  std::vector<Polynomial> all;
  for (const auto& rows : subsets(big.rows(), 2))
    for (const auto& cols : subsets(big.cols(), 2)) all.push_back(leibniz(big.submatrix(rows, cols)));
  CHECK(ideal_equal(Ideal(r, all), expected));
  for (int k = 0; k <= 4; ++k)
    CHECK(ideal_equal(block_diag_determinantal(d0, d1, k), block_diag_determinantal_direct(d0, d1, k)));
}

TEST_CASE("complex validation") {
  Ring r = qring({"x"});
  CHECK_THROWS_AS(FreeComplex(r, 0, {1, 1, 1}, {mat(r, {{"x"}}), mat(r, {{"1"}})}), ValidationError);
  CHECK_THROWS_AS(FreeComplex(r, 0, {1, 2}, {mat(r, {{"x"}})}), ValidationError);
  FreeComplex ok(r, 0, {1, 1, 1}, {mat(r, {{"x"}}), mat(r, {{"0"}})});
  CHECK(squares_to_zero(ok));
  CHECK(ok.diff(5).rows() == 0);
}

TEST_CASE("jump ideal examples") {
  Ring r = qring({"x"});
  FreeComplex zero = FreeComplex::zero(r, 0, 2);
  for (int i = -1; i <= 3; ++i)
    for (int k = 1; k <= 3; ++k) CHECK(jump_ideal(zero, i, k).is_unit());

  FreeComplex e = line_complex(r, "x");
  CHECK(ideal_equal(jump_ideal(e, 0, 1), I(r, {"x"})));
  CHECK(ideal_equal(jump_ideal(e, 1, 1), I(r, {"x"})));
  CHECK(jump_ideal(e, 1, 2).is_unit());
  CHECK_THROWS_AS(jump_ideal(e, 0, 0), ValidationError);

  // Fiber-rank oracle: the point x = c lies in V(J^i_k) iff dim H^i of the
  // specialized complex is at least k.
  for (int c : {0, 1, -2}) {
    std::vector<Matrix> diffs{e.diff(0).evaluate({Rational(c)})};
    for (int i = 0; i <= 1; ++i) {
      for (int k = 1; k <= 3; ++k) {
        Ideal j = jump_ideal(e, i, k);
        bool vanishes = true;
        for (const auto& g : j.groebner()) vanishes = vanishes && g.evaluate({Rational(c)}) == 0;
        CHECK(vanishes == (cohomology_rank(e.ranks(), diffs, 0, i) >= static_cast<std::size_t>(k)));
      }
    }
  }

  FreeComplex unit = line_complex(r, "1");
  CHECK(jump_ideal(unit, 0, 1).is_unit());
}

TEST_CASE("jump ideals grow with k") {
  for (const auto& entry : complex_corpus(6, 5)) {
    const FreeComplex& e = entry.complex;
    for (int i = e.lo(); i <= e.hi(); ++i)
      for (int k = 1; k <= 4; ++k) CHECK(jump_ideal(e, i, k + 1).contains(jump_ideal(e, i, k)));
  }
}

TEST_CASE("minimization") {
  ArtinLocalAlgebra a = truncated_line(2);
  const Ring& r = a.ring();
  FreeComplex unit = line_complex(r, "1");
  FreeComplex m1 = minimize_complex(a, unit);
  std::size_t total = 0;
  for (auto rank : m1.ranks()) total += rank;
  CHECK(total == 0);

  FreeComplex tline = line_complex(r, "t");
  FreeComplex m2 = minimize_complex(a, tline);
  CHECK(m2.ranks() == tline.ranks());
  CHECK(m2.diff(0) == tline.diff(0));

  FreeComplex sum = unit + tline;
  FreeComplex m3 = minimize_complex(a, sum);
  REQUIRE(m3.rank(0) == 1);
  REQUIRE(m3.rank(1) == 1);
  Polynomial entry = m3.diff(0)(0, 0);
  CHECK(a.in_max_ideal(entry));
  CHECK(ideal_equal(Ideal(r, {entry}), Ideal(r, {P(r, "t")})));
}

TEST_CASE("base change") {
  Ring r = qring({"x"});
  Ring q = RingContext::quotient(r, {P(r, "x")});
  FreeComplex e = line_complex(r, "x");
  RingMap phi = RingMap::projection(r, q);
  FreeComplex reduced = base_change(e, phi);
  CHECK(reduced.diff(0).is_zero());
  Ideal image = extend_ideal(jump_ideal(e, 0, 1), phi);
  CHECK(image.is_zero());
  CHECK(ideal_equal(image, jump_ideal(reduced, 0, 1)));

  RingMap id = RingMap::identity(r);
  for (int i = 0; i <= 1; ++i)
    for (int k = 1; k <= 2; ++k) CHECK(ideal_equal(jump_ideal(base_change(e, id), i, k), jump_ideal(e, i, k)));

  Ring bad = RingContext::quotient(r, {P(r, "x - 1")});
  RingMap from_q{q, bad, {P(bad, "x")}};
  CHECK_THROWS_AS(from_q.check_well_defined(), ValidationError);
}

TEST_CASE("residue base change gives the fiber complex") {
  ArtinLocalAlgebra a = truncated_line(3);
  FreeComplex e(a.ring(), 0, {2, 2}, {mat(a.ring(), {{"1 + t", "t"}, {"t^2", "t"}})});
  RingMap res = RingMap::residue(a.ring());
  FreeComplex fiber = base_change(e, res);
  Matrix c = e.diff(0).constant_part();
  CHECK(fiber.diff(0).evaluate({}) == c);
  for (int i = 0; i <= 1; ++i) {
    CHECK(fiber_cohomology_rank(a, e, i) == cohomology_rank(e.ranks(), {c}, 0, i));
  }
}

TEST_CASE("fiber cohomology") {
  ArtinLocalAlgebra a = truncated_line(2);
  CHECK(fiber_cohomology_rank(a, FreeComplex::zero(a.ring(), 0, 1), 0) == 0);
  CHECK(fiber_cohomology_rank(a, line_complex(a.ring(), "t"), 0) == 1);
  FreeComplex m = minimize_complex(a, line_complex(a.ring(), "t") + line_complex(a.ring(), "1"));
  for (int i = m.lo(); i <= m.hi(); ++i) CHECK(fiber_cohomology_rank(a, m, i) == m.rank(i));
}

TEST_CASE("q-equivalences") {
  ArtinLocalAlgebra a = truncated_line(2);
  const Ring& r = a.ring();
  FreeComplex e = line_complex(r, "t");
  CHECK(is_q_equivalence(a, ComplexMap::identity(e), std::nullopt));

  FreeComplex acyclic = line_complex(r, "1");
  FreeComplex zero = FreeComplex::zero(r, 0, 1);
  CHECK(is_q_equivalence(a, ComplexMap(zero, acyclic, {}), std::nullopt));

  FreeComplex sum = e + acyclic;
  std::map<int, PolyMatrix> proj;
  proj.emplace(0, mat(r, {{"1", "0"}}));
  proj.emplace(1, mat(r, {{"1", "0"}}));
  ComplexMap g(sum, e, proj);
  CHECK(is_q_equivalence(a, g, std::nullopt));
  for (int i = 0; i <= 1; ++i)
    for (int k = 1; k <= 3; ++k) CHECK(ideal_equal(jump_ideal(a, sum, i, k), jump_ideal(a, e, i, k)));

  std::map<int, PolyMatrix> bad;
  bad.emplace(0, mat(r, {{"1", "0"}}));
  CHECK_THROWS_AS(ComplexMap(sum, e, bad), ValidationError);

  // The zero self-map loses all cohomology.
  ComplexMap kill(e, e, {});
  CHECK_FALSE(is_q_equivalence(a, kill, 0));
}

TEST_CASE("padding leaves jump ideals unchanged") {
  std::mt19937_64 rng(7);
  for (const auto& entry : complex_corpus(8, 21)) {
    FreeComplex padded = pad_randomly(entry.algebra, entry.complex, rng);
    for (int i = padded.lo() - 1; i <= padded.hi() + 1; ++i)
      for (int k = 1; k <= 4; ++k)
        CHECK(ideal_equal(jump_ideal(entry.algebra, entry.complex, i, k), jump_ideal(entry.algebra, padded, i, k)));
  }
}
