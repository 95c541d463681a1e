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

#include "cjl/geometry/analysis.hpp"

#include <algorithm>
#include <sstream>

#include "cjl/algebra/errors.hpp"
#include "cjl/complexes/determinantal.hpp"

namespace cjl {

namespace {

std::string num(long v) { return std::to_string(v); }

// f / g when g divides f exactly in a polynomial ring.
Polynomial exact_quotient(const Polynomial& f, const Polynomial& g) {
  const Ring& ring = f.ring();
  Polynomial q(ring);
  Polynomial r = f;
  while (!r.is_zero()) {
    if (!r.lm().divisible_by(g.lm())) throw Error("fraction-free elimination produced an inexact division");
    Monomial m = r.lm() / g.lm();
    Rational c = ring->field().div(r.lc(), g.lc());
    q += Polynomial::monomial(ring, m, c);
    r -= g.mul_term(m, c);
  }
  return q;
}

long binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (long j = 1; j <= k; ++j) r = r * (n - k + j) / j;
  return r;
}

// Loci and their codimensions, computed once per analysis.
class Loci {
 public:
  Loci(const UniversalAomoto& u, const GenericRanks& ranks) : u_(u), ranks_(ranks) {}

  const Ideal& resonance(int i, int k) {
    auto it = res_.find({i, k});
    if (it == res_.end()) it = res_.emplace(std::make_pair(i, k), resonance_ideal(u_, i, k)).first;
    return it->second;
  }

  const Ideal& fitting(int i, int k) {
    auto it = fit_.find({i, k});
    if (it == fit_.end()) it = fit_.emplace(std::make_pair(i, k), fitting_locus(u_, ranks_, i, k)).first;
    return it->second;
  }

  const UniversalAomoto& u() const { return u_; }
  const GenericRanks& ranks() const { return ranks_; }

 private:
  const UniversalAomoto& u_;
  const GenericRanks& ranks_;
  std::map<std::pair<int, int>, Ideal> res_;
  std::map<std::pair<int, int>, Ideal> fit_;
};

std::string ideal_id(int i, int k) { return "i=" + num(i) + ":k=" + num(k); }

std::string cm_note(const QuadraticCone& cone) { return cm_certified(cone) ? "" : " (cm_assumed)"; }

std::vector<Verdict> fitting_claims(Loci& loci, int a) {
  const UniversalAomoto& u = loci.u();
  const GenericRanks& ranks = loci.ranks();
  std::vector<Verdict> out;
  const int top = std::min(a - 1, u.hi());
  for (int i = u.lo(); i <= top; ++i) {
    const Ideal& r = loci.resonance(i, 1);
    const Ideal& f = loci.fitting(i, 1);
    bool fwd = projectively_contained(r, f);
    bool back = projectively_contained(f, r);
    out.push_back({"9.1b:i=" + num(i), fwd && back,
                   std::string(fwd ? "" : "resonance locus not inside Fitting support; ") +
                       (back ? "" : "Fitting support not inside resonance locus; ") + "R=" + r.to_string() +
                       " F=" + f.to_string()});
  }
  if (u.lo() == 0 && a > 0) {
    for (int k = 1; k <= static_cast<int>(ranks.b_at(0)); ++k) {
      const Ideal& r = loci.resonance(0, k);
      const Ideal& f = loci.fitting(0, k);
      bool eq = ideal_equal(r, f);
      out.push_back({"9.1f:k=" + num(k), eq, "R=" + r.to_string() + " F=" + f.to_string()});
    }
  }
  for (int i = u.lo(); i <= top; ++i) {
    for (int k = 2; k <= static_cast<int>(ranks.beta_at(i)); ++k) {
      bool c = projectively_contained(loci.fitting(i, k), loci.resonance(i, k));
      out.push_back({"9.1g:" + ideal_id(i, k), c, c ? "Fitting support inside resonance locus" : "support escapes"});
    }
  }
  return out;
}

std::vector<Verdict> inclusion_claims(Loci& loci, int a) {
  const UniversalAomoto& u = loci.u();
  std::vector<Verdict> out;
  const int top = std::min(a - 1, u.hi());
  for (int i = u.lo() + 1; i <= top; ++i) {
    bool c = projectively_contained(loci.resonance(i - 1, 1), loci.resonance(i, 1));
    out.push_back({"9.1c:i=" + num(i), c,
                   loci.resonance(i - 1, 1).to_string() + (c ? " inside " : " not inside ") +
                       loci.resonance(i, 1).to_string()});
  }
  for (int i = u.lo(); i < a - 1 && i + 1 <= u.hi(); ++i) {
    std::vector<int> ks{2};
    if (i + 1 > 0) {
      int kmax = 1 + (a - 2) / (i + 1);
      for (int k = 1; k <= kmax; ++k) {
        if (k != 2) ks.push_back(k);
      }
    }
    std::sort(ks.begin(), ks.end());
    for (int k : ks) {
      const Ideal& small = loci.resonance(i, 1);
      const Ideal& big = loci.resonance(i + 1, k);
      bool c = affinely_contained(small, big);
      out.push_back({"9.1j:" + ideal_id(i, k), c,
                     small.to_string() + (c ? " inside " : " not inside ") + big.to_string()});
    }
  }
  return out;
}

std::vector<Verdict> codim_claims(Loci& loci, int a) {
  const UniversalAomoto& u = loci.u();
  const GenericRanks& ranks = loci.ranks();
  const std::string note = cm_note(u.cone);
  std::vector<Verdict> out;
  const int top = std::min(a - 1, u.hi());
  for (int i = u.lo(); i <= top; ++i) {
    ProjectiveCodim q = projective_codim(u.cone, loci.resonance(i, 1));
    std::string qs = "codim " + num(q.codim) + (q.empty ? " (empty)" : "");
    out.push_back({"9.1d:i=" + num(i), q.codim >= a - i, qs + " vs a-i = " + num(a - i) + note});
    long bound = static_cast<long>(ranks.beta_at(i - 1) + 1) * static_cast<long>(ranks.beta_at(i + 1) + 1);
    out.push_back({"9.1e:i=" + num(i), q.empty || q.codim <= bound,
                   q.empty ? "empty locus, bound vacuous" + note : qs + " vs bound " + num(bound) + note});
    for (int k = 1; k <= static_cast<int>(ranks.b_at(i)); ++k) {
      ProjectiveCodim qk = projective_codim(u.cone, loci.resonance(i, k));
      long bk = static_cast<long>(ranks.beta_at(i - 1) + k) * static_cast<long>(ranks.beta_at(i + 1) + k);
      out.push_back({"9.1h:" + ideal_id(i, k), qk.empty || qk.codim <= bk,
                     qk.empty ? "empty locus, bound vacuous" + note
                              : "codim " + num(qk.codim) + " vs bound " + num(bk) + note});
    }
  }
  return out;
}

std::size_t rank_from_ideals(const PolyMatrix& phi, const Vector& eta) {
  std::size_t r = 0;
  const std::size_t top = std::min(phi.rows(), phi.cols());
  for (std::size_t s = 1; s <= top; ++s) {
    Ideal ideal = determinantal_ideal(phi, static_cast<int>(s));
    bool nonzero = false;
    for (const auto& g : ideal.groebner()) {
      if (g.evaluate(eta) != 0) {
        nonzero = true;
        break;
      }
    }
    if (!nonzero) break;
    r = s;
  }
  return r;
}

}  // namespace

std::size_t GenericRanks::b_at(int i) const {
  if (i < lo || i >= lo + static_cast<int>(b.size())) return 0;
  return b[static_cast<std::size_t>(i - lo)];
}

std::size_t GenericRanks::beta_at(int i) const {
  if (i < lo || i >= lo + static_cast<int>(beta.size())) return 0;
  return beta[static_cast<std::size_t>(i - lo)];
}

std::size_t generic_rank(const PolyMatrix& phi, const Ideal& iq) {
  std::size_t r = 0;
  const std::size_t top = std::min(phi.rows(), phi.cols());
  for (std::size_t s = 1; s <= top; ++s) {
    bool escapes = false;
    for (const auto& m : minors(phi, static_cast<int>(s))) {
      if (!m.is_zero() && !iq.contains(m.in_ring(iq.ring()))) {
        escapes = true;
        break;
      }
    }
    if (!escapes) break;
    r = s;
  }
  return r;
}

std::size_t bareiss_rank(const PolyMatrix& phi) {
  const Ring& ring = phi.ring();
  if (ring->has_quotient()) throw ValidationError("fraction-free elimination needs a polynomial ring");
  const std::size_t rows = phi.rows(), cols = phi.cols();
  std::vector<std::vector<Polynomial>> m(rows);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m[r].push_back(phi(r, c));
  }
  std::vector<std::size_t> colperm(cols);
  for (std::size_t c = 0; c < cols; ++c) colperm[c] = c;
  Polynomial prev = Polynomial::constant(ring, 1);
  std::size_t rank = 0;
  for (std::size_t k = 0; k < std::min(rows, cols); ++k) {
    std::size_t pr = rows, pc = cols;
    for (std::size_t r = k; r < rows && pr == rows; ++r) {
      for (std::size_t c = k; c < cols; ++c) {
        if (!m[r][c].is_zero()) {
          pr = r;
          pc = c;
          break;
        }
      }
    }
    if (pr == rows) break;
    std::swap(m[k], m[pr]);
    if (pc != k) {
      for (auto& row : m) std::swap(row[k], row[pc]);
    }
    for (std::size_t r = k + 1; r < rows; ++r) {
      for (std::size_t c = k + 1; c < cols; ++c) {
        m[r][c] = exact_quotient(m[k][k] * m[r][c] - m[r][k] * m[k][c], prev);
      }
      m[r][k] = Polynomial(ring);
    }
    prev = m[k][k];
    ++rank;
  }
  return rank;
}

GenericRanks generic_ranks(const UniversalAomoto& u) {
  GenericRanks g;
  g.lo = u.lo();
  for (int i = u.lo(); i <= u.hi(); ++i) {
    g.b.push_back(u.betti(i));
    PolyMatrix phi = u.phi_at(i);
    std::size_t r = generic_rank(phi, u.cone.ideal);
    if (u.cone.ideal.is_zero()) {
      std::size_t rb = bareiss_rank(phi);
      if (rb != r) {
        throw Error("generic rank of phi_" + num(i) + ": minors give " + num(static_cast<long>(r)) +
                    ", elimination gives " + num(static_cast<long>(rb)));
      }
    }
    g.beta.push_back(r);
  }
  return g;
}

bool cm_certified(const QuadraticCone& cone) {
  if (cone.ideal.is_zero()) return true;
  for (const auto& g : cone.ideal.generators()) {
    if (ideal_equal(Ideal(cone.s, {g}), cone.ideal)) return true;
  }
  return false;
}

int codimension(const QuadraticCone& cone, const Ideal& ideal) {
  const int kq = krull_dimension(cone.ideal);
  Ideal sum = Ideal(cone.s, ideal.preimage().generators()) + cone.ideal;
  return kq - krull_dimension(sum);
}

ProjectiveCodim projective_codim(const QuadraticCone& cone, const Ideal& ideal) {
  const int kq = krull_dimension(cone.ideal);
  Ideal sum = Ideal(cone.s, ideal.preimage().generators()) + cone.ideal;
  const int kj = krull_dimension(sum);
  if (kj <= 0) return {kq, true};
  return {kq - kj, false};
}

bool affinely_contained(const Ideal& a, const Ideal& b) {
  for (const auto& g : b.generators()) {
    if (!radical_membership(g.in_ring(a.ring()), a)) return false;
  }
  return true;
}

bool projectively_contained(const Ideal& a, const Ideal& b) {
  const Ring& ring = a.ring();
  for (const auto& g0 : b.generators()) {
    Polynomial g = g0.in_ring(ring);
    if (radical_membership(g, a)) continue;
    for (std::size_t j = 0; j < ring->nvars(); ++j) {
      if (!radical_membership(Polynomial::variable(ring, j) * g, a)) return false;
    }
  }
  return true;
}

int exactness_threshold(const UniversalAomoto& u, const GenericRanks& ranks) {
  bool nonzero = false;
  for (auto b : ranks.b) nonzero = nonzero || b != 0;
  if (!nonzero) throw ValidationError("exactness threshold of the zero module");
  // codim of I_{beta_i}(phi_i); nullopt stands for the unit ideal.
  std::map<int, std::optional<int>> depth;
  auto depth_at = [&](int i) {
    auto it = depth.find(i);
    if (it != depth.end()) return it->second;
    Ideal ideal = determinantal_ideal(u.phi_at(i), static_cast<int>(ranks.beta_at(i)));
    std::optional<int> d;
    if (!(ideal + u.cone.ideal).is_unit()) d = codimension(u.cone, ideal);
    depth[i] = d;
    return d;
  };
  for (int j = u.lo(); j <= u.hi(); ++j) {
    for (int i = u.lo(); i <= j; ++i) {
      if (ranks.b_at(i) != ranks.beta_at(i) + ranks.beta_at(i - 1)) return j;
      auto d = depth_at(i);
      if (d && *d < j + 1 - i) return j;
    }
  }
  return u.hi() + 1;
}

Ideal fitting_locus(const UniversalAomoto& u, const GenericRanks& ranks, int i, int k) {
  int r = static_cast<int>(ranks.beta_at(i)) + 1 - k;
  return determinantal_ideal(u.phi_at(i), r) + u.cone.ideal;
}

std::vector<Verdict> verify_rank_identity(const UniversalAomoto& u, const GenericRanks& ranks, int a) {
  std::vector<Verdict> out;
  const std::string note = cm_note(u.cone);
  for (int i = u.lo(); i <= std::min(a - 1, u.hi()); ++i) {
    long b = static_cast<long>(ranks.b_at(i));
    long s = static_cast<long>(ranks.beta_at(i) + ranks.beta_at(i - 1));
    out.push_back({"9.1a:i=" + num(i), b == s, "b=" + num(b) + " beta_i+beta_{i-1}=" + num(s)});
    Ideal ideal = determinantal_ideal(u.phi_at(i), static_cast<int>(ranks.beta_at(i)));
    if ((ideal + u.cone.ideal).is_unit()) {
      out.push_back({"9.1a-depth:i=" + num(i), true, "unit ideal"});
    } else {
      int c = codimension(u.cone, ideal);
      out.push_back({"9.1a-depth:i=" + num(i), c >= a - i, "codim " + num(c) + " vs a-i = " + num(a - i) + note});
    }
  }
  return out;
}

std::vector<Verdict> verify_fitting_claims(const UniversalAomoto& u, const GenericRanks& ranks, int a) {
  Loci loci(u, ranks);
  return fitting_claims(loci, a);
}

std::vector<Verdict> verify_inclusions(const UniversalAomoto& u, int a) {
  GenericRanks ranks = generic_ranks(u);
  Loci loci(u, ranks);
  return inclusion_claims(loci, a);
}

std::vector<Verdict> verify_codim_bounds(const UniversalAomoto& u, const GenericRanks& ranks, int a) {
  Loci loci(u, ranks);
  return codim_claims(loci, a);
}

std::vector<Verdict> binomial_bound(const GenericRanks& ranks, int a, bool polynomial_ring) {
  std::vector<Verdict> out;
  if (polynomial_ring) {
    for (int i = std::max(ranks.lo, 0); i < a; ++i) {
      long b = static_cast<long>(ranks.b_at(i));
      long c = binomial(a, i);
      out.push_back({"9.1k-b:i=" + num(i), b >= c, "b=" + num(b) + " C(a,i)=" + num(c)});
    }
  }
  int i0 = ranks.lo;
  while (i0 < ranks.lo + static_cast<int>(ranks.b.size()) && ranks.b_at(i0) == 0) ++i0;
  for (int i = i0 + 1; i < a; ++i) {
    long beta = static_cast<long>(ranks.beta_at(i));
    out.push_back({"9.1k-beta:i=" + num(i), beta >= a - i, "beta=" + num(beta) + " a-i=" + num(a - i)});
  }
  return out;
}

TorComparison tor_crosscheck(const UniversalAomoto& u, int a, const Vector& eta, int i) {
  if (i < 0) throw ValidationError("Tor index must be non-negative");
  if (std::all_of(eta.begin(), eta.end(), [](const Rational& x) { return x == 0; })) {
    throw ValidationError("Tor comparison needs a nonzero point");
  }
  if (!in_quadratic_cone(u, eta)) throw ValidationError("point is not on the quadratic cone");
  const int deg = a - i;
  auto out_map = [&](int j) { return j >= a ? PolyMatrix(u.cone.s, u.betti(j + 1), u.betti(j)) : u.phi_at(j); };
  TorComparison t;
  const long b = static_cast<long>(u.betti(deg));
  long left = b - static_cast<long>(rank(out_map(deg).evaluate(eta))) - static_cast<long>(rank(out_map(deg - 1).evaluate(eta)));
  long right = b - static_cast<long>(rank_from_ideals(out_map(deg), eta)) -
               static_cast<long>(rank_from_ideals(out_map(deg - 1), eta));
  t.left = static_cast<std::size_t>(std::max(left, 0L));
  t.right = static_cast<std::size_t>(std::max(right, 0L));
  return t;
}

ResonanceReport analyze(const DglaPair& p) {
  UniversalAomoto u = universal_aomoto(p);
  ResonanceReport rep;
  rep.ranks = generic_ranks(u);
  rep.a = exactness_threshold(u, rep.ranks);
  const int a = rep.a;
  if (!cm_certified(u.cone)) rep.flags.push_back("cm_assumed");

  std::vector<long> b;
  for (int d = 0; d <= u.hi(); ++d) b.push_back(static_cast<long>(rep.ranks.b_at(d)));
  rep.chi_a = euler_chi(b, a);

  Loci loci(u, rep.ranks);
  auto append = [&rep](std::vector<Verdict> v) { rep.claims.insert(rep.claims.end(), v.begin(), v.end()); };
  append(verify_rank_identity(u, rep.ranks, a));
  append(fitting_claims(loci, a));
  append(inclusion_claims(loci, a));
  append(codim_claims(loci, a));
  append(binomial_bound(rep.ranks, a, u.cone.ideal.is_zero()));

  for (int i = u.lo(); i <= std::min(a - 1, u.hi()); ++i) rep.q[i] = projective_codim(u.cone, loci.resonance(i, 1));
  if (rep.chi_a != 0) {
    for (int i = std::max(u.lo(), 0); i <= std::min(a - 1, u.hi()); ++i) {
      ChernSeries cs = gated_chern_series(b, i, a, rep.q[i].codim);
      append(schur_nonnegativity(cs, rep.q[i].codim));
      rep.chern[i] = std::move(cs);
    }
  } else {
    rep.flags.push_back("chi_a_zero");
  }
  return rep;
}

}  // namespace cjl
