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

#include "cjl/dgla/resonance.hpp"

#include "cjl/algebra/errors.hpp"
#include "cjl/complexes/jump.hpp"

namespace cjl {

namespace {

// sum over basis pairs (x, y) of degree 1 of coef * var(x) * var(y) * [x, y].
std::vector<Polynomial> quadratic_part(const Ring& ring, const GradedSpace& s, const StructureConstants& sc,
                                       const Rational& scale) {
  std::vector<Polynomial> out(s.dim(2), Polynomial(ring));
  for (const auto& [xy, val] : sc) {
    if (s.degree_of(xy.first) != 1 || s.degree_of(xy.second) != 1) continue;
    Polynomial m = Polynomial::variable(ring, s.local_of(xy.first)) * Polynomial::variable(ring, s.local_of(xy.second));
    for (const auto& [k, c] : val) out[s.local_of(k)] += m * (c * scale);
  }
  return out;
}

}  // namespace

QuadraticCone quadratic_cone_ideal(const Dgla& c) {
  CohomologyDgla h = cohomology_dgla(c);
  const GradedSpace& hs = h.dgla.space();
  Ring s = RingContext::make(c.field(), hs.dim(1));
  Ideal iq(s, quadratic_part(s, hs, h.dgla.bracket_table(), 1));
  Ring q = iq.is_zero() ? s : RingContext::quotient(s, iq.generators());
  return {s, iq, q};
}

FlatConnections flat_connection_ideal(const Dgla& c) {
  const GradedSpace& cs = c.space();
  Ring ring = RingContext::make(c.field(), cs.dim(1));
  std::vector<Polynomial> eq = quadratic_part(ring, cs, c.bracket_table(), Rational(1, 2));
  Matrix d = c.diff_matrix(1);
  for (std::size_t r = 0; r < d.rows(); ++r) {
    for (std::size_t a = 0; a < d.cols(); ++a) {
      if (d(r, a) != 0) eq[r] += Polynomial::variable(ring, a) * d(r, a);
    }
  }
  return {ring, Ideal(ring, eq)};
}

PolyMatrix UniversalAomoto::phi_at(int i) const {
  if (i >= lo() && i < hi()) return phi[static_cast<std::size_t>(i - lo())];
  return PolyMatrix(cone.s, betti(i + 1), betti(i));
}

UniversalAomoto universal_aomoto(const DglaPair& p) {
  CohomologyPair hp = cohomology_pair(p);
  QuadraticCone cone = quadratic_cone_ideal(hp.pair.lie());
  const GradedSpace& cs = hp.pair.lie().space();
  const GradedSpace& ms = hp.pair.module();
  const Ring& s = cone.s;
  std::vector<PolyMatrix> phi;
  for (int i = ms.lo(); i < ms.hi(); ++i) phi.emplace_back(s, ms.dim(i + 1), ms.dim(i));
  for (const auto& [xm, val] : hp.pair.action_table()) {
    if (cs.degree_of(xm.first) != 1) continue;
    int i = ms.degree_of(xm.second);
    if (i >= ms.hi()) continue;
    Polynomial x = Polynomial::variable(s, cs.local_of(xm.first));
    PolyMatrix& m = phi[static_cast<std::size_t>(i - ms.lo())];
    for (const auto& [k, c] : val) m(ms.local_of(k), ms.local_of(xm.second)) += x * c;
  }
  std::vector<PolyMatrix> over_q;
  for (const auto& m : phi) over_q.push_back(m.in_ring(cone.quotient));
  FreeComplex complex(cone.quotient, ms.lo(), ms.dims(), std::move(over_q));
  return {std::move(cone), std::move(hp.pair), std::move(phi), std::move(complex)};
}

Ideal resonance_ideal(const UniversalAomoto& u, int i, int k) { return jump_ideal(u.complex, i, k).preimage(); }

Ideal resonance_ideal(const DglaPair& p, int i, int k) { return resonance_ideal(universal_aomoto(p), i, k); }

bool in_quadratic_cone(const UniversalAomoto& u, const Vector& eta) {
  if (eta.size() != u.cone.s->nvars()) throw ValidationError("point has " + std::to_string(eta.size()) + " coordinates, expected " + std::to_string(u.cone.s->nvars()));
  for (const auto& g : u.cone.ideal.generators()) {
    if (g.evaluate(eta) != 0) return false;
  }
  return true;
}

std::size_t pointwise_resonance(const UniversalAomoto& u, const Vector& eta, int i) {
  if (!in_quadratic_cone(u, eta)) throw ValidationError("point is not on the quadratic cone");
  std::vector<Matrix> mats;
  for (const auto& m : u.phi) mats.push_back(m.evaluate(eta));
  return cohomology_rank(u.complex.ranks(), mats, u.lo(), i);
}

std::size_t pointwise_resonance(const DglaPair& p, const Vector& eta, int i) {
  return pointwise_resonance(universal_aomoto(p), eta, i);
}

}  // namespace cjl
