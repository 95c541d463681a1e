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

#include "cjl/acceptance/acceptance.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <random>
#include <sstream>

#include "cjl/acceptance/fixtures.hpp"
#include "cjl/algebra/errors.hpp"
#include "cjl/algebra/parse.hpp"
#include "cjl/complexes/jump.hpp"
#include "cjl/dgla/aomoto.hpp"
#include "cjl/dgla/pair_map.hpp"
#include "cjl/geometry/analysis.hpp"
#include "cjl/models/models.hpp"
#include "cjl/models/orlik_solomon.hpp"

namespace cjl {

namespace {

constexpr std::size_t kCorpusSize = 50;

struct Outcome {
  bool passed = true;
  std::string detail;
  std::size_t checks = 0;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok && passed) {
      passed = false;
      detail = what;
    }
  }
};

std::string window_id(int i, int k) { return "(i=" + std::to_string(i) + ", k=" + std::to_string(k) + ")"; }

Outcome resolution_independence(std::uint64_t seed) {
  Outcome out;
  std::mt19937_64 rng(seed ^ 0x51u);
  auto corpus = complex_corpus(kCorpusSize, seed);
  for (std::size_t n = 0; n < corpus.size(); ++n) {
    const auto& [a, e] = corpus[n];
    FreeComplex padded = pad_randomly(a, e, rng);
    const int lo = std::min(e.lo(), padded.lo()) - 1;
    const int hi = std::max(e.hi(), padded.hi()) + 1;
    for (int i = lo; i <= hi; ++i) {
      for (int k = 1; k <= 5; ++k) {
        out.expect(ideal_equal(jump_ideal(e, i, k), jump_ideal(padded, i, k)),
                   "complex " + std::to_string(n) + " " + window_id(i, k) + " changed under padding");
      }
    }
  }
  out.detail = out.passed ? std::to_string(corpus.size()) + " complexes, " + std::to_string(out.checks) + " ideal comparisons" : out.detail;
  return out;
}

Outcome fiber_criterion(std::uint64_t seed) {
  Outcome out;
  auto corpus = complex_corpus(kCorpusSize, seed);
  for (std::size_t n = 0; n < corpus.size(); ++n) {
    const auto& [a, e] = corpus[n];
    Ideal m = a.max_ideal();
    for (int i = e.lo(); i <= e.hi(); ++i) {
      const std::size_t h = fiber_cohomology_rank(a, e, i);
      for (int k = 1; k <= 5; ++k) {
        bool inside = m.contains(jump_ideal(e, i, k));
        out.expect(inside == (h >= static_cast<std::size_t>(k)),
                   "complex " + std::to_string(n) + " " + window_id(i, k) + ": J in m is " + (inside ? "true" : "false") +
                       " but fiber dimension is " + std::to_string(h));
      }
    }
  }
  out.detail = out.passed ? std::to_string(out.checks) + " (i, k) pairs agree" : out.detail;
  return out;
}

Outcome base_change_commutes(std::uint64_t seed) {
  Outcome out;
  auto corpus = complex_corpus(kCorpusSize, seed);
  ArtinLocalAlgebra line = truncated_line(3);
  Ring line2 = RingContext::quotient(line.ring(), {parse_polynomial(line.ring()->base(), "t^2")});
  Ring point2 = RingContext::quotient(fat_point().ring(), {parse_polynomial(fat_point().ring()->base(), "x")});
  for (std::size_t n = 0; n < corpus.size(); ++n) {
    const auto& [a, e] = corpus[n];
    const Ring& target = a.ring()->nvars() == 1 ? line2 : point2;
    for (const RingMap& phi : {RingMap::projection(a.ring(), target), RingMap::residue(a.ring())}) {
      FreeComplex f = base_change(e, phi);
      for (int i = e.lo(); i <= e.hi(); ++i) {
        for (int k = 1; k <= 5; ++k) {
          out.expect(ideal_equal(jump_ideal(f, i, k), extend_ideal(jump_ideal(e, i, k), phi)),
                     "complex " + std::to_string(n) + " " + window_id(i, k) + " over " + phi.target->describe());
        }
      }
    }
  }
  out.detail = out.passed ? std::to_string(out.checks) + " base-changed ideals agree" : out.detail;
  return out;
}

Outcome gauge_calculus(std::uint64_t seed) {
  Outcome out;
  std::mt19937_64 rng(seed ^ 0x4au);
  ArtinLocalAlgebra a = truncated_line(4);
  DglaPair p = nonabelian_fixture();
  const Dgla& c = p.lie();
  const GradedSpace& ms = p.module();
  std::size_t jump_trials = 0;
  for (int trial = 0; trial < 100; ++trial) {
    Elem lambda = random_elem(c.space(), 0, a, rng);
    Elem omega = random_elem(c.space(), 1, a, rng);
    int deg = ms.lo() + static_cast<int>(rng() % static_cast<std::uint64_t>(ms.hi() - ms.lo() + 1));
    Elem xi = random_elem(ms, deg, a, rng, 0);
    const std::string t = "trial " + std::to_string(trial);
    out.expect(maurer_cartan_check(c, a, omega), t + ": sampled omega is not Maurer-Cartan");
    out.expect(transport_product_identity(p, a, lambda, omega, xi).holds(), t + ": product transport identity fails");
    out.expect(transport_differential_identity(p, a, lambda, xi).holds(), t + ": differential transport identity fails");
    Elem moved = gauge_act(c, a, lambda, omega);
    out.expect(maurer_cartan_check(c, a, moved), t + ": gauge image is not Maurer-Cartan");
    if (trial % 4 == 0) {
      ++jump_trials;
      FreeComplex e0 = aomoto_complex(p, a, omega);
      FreeComplex e1 = aomoto_complex(p, a, moved);
      for (int i = e0.lo(); i <= e0.hi(); ++i) {
        for (int k = 1; k <= 4; ++k) {
          out.expect(ideal_equal(jump_ideal(a, e0, i, k), jump_ideal(a, e1, i, k)),
                     t + ": jump ideal " + window_id(i, k) + " differs between gauge-equivalent elements");
        }
      }
    }
  }
  out.detail = out.passed ? "100 samples, jump ideals compared on " + std::to_string(jump_trials) : out.detail;
  return out;
}

Elem apply_matrix(const Matrix& g, const Elem& x) {
  const Ring& ring = x.front().ring();
  Elem out = zero_elem(ring, g.rows());
  for (std::size_t r = 0; r < g.rows(); ++r) {
    for (std::size_t s = 0; s < g.cols(); ++s) {
      if (g(r, s) != 0) out[r] += x[s] * g(r, s);
    }
  }
  return out;
}

Outcome acyclic_summand(std::uint64_t seed) {
  Outcome out;
  std::mt19937_64 rng(seed ^ 0x5cu);
  ArtinLocalAlgebra a = truncated_line(3);
  std::vector<std::pair<std::string, DglaPair>> pairs{{"fixture", nonabelian_fixture()}, {"T2", exterior_pair(2)}};
  for (const auto& [name, p] : pairs) {
    for (int degree : {0, 1}) {
      PairMap inc = include_into_sum(p, acyclic_pair(p.field(), degree));
      const int lo = std::min(p.module().lo(), inc.target.module().lo());
      const int hi = std::max(p.module().hi(), inc.target.module().hi());
      for (int s = 0; s < 6; ++s) {
        Elem omega = sample_mc(p.lie(), a, rng);
        Elem image = apply_matrix(inc.g1, omega);
        for (int i = lo; i <= hi; ++i) {
          for (int k = 1; k <= 4; ++k) {
            out.expect(def_jump_test(p, a, omega, i, k) == def_jump_test(inc.target, a, image, i, k),
                       name + " with acyclic summand at " + std::to_string(degree) + ": " + window_id(i, k));
          }
        }
      }
    }
  }
  out.detail = out.passed ? std::to_string(out.checks) + " deformation jump tests agree" : out.detail;
  return out;
}

Outcome torus_oracle(std::uint64_t seed) {
  Outcome out;
  UniversalAomoto t2 = universal_aomoto(exterior_pair(2));
  const Ring& s = t2.cone.s;
  auto frozen = [&s](std::vector<std::string> g) { return Ideal(s, parse_polynomials(s, g)); };
  out.expect(ideal_equal(resonance_ideal(t2, 1, 1), frozen({"x0^2", "x0*x1", "x1^2"})), "T2: R^1_1 differs from frozen value");
  out.expect(ideal_equal(resonance_ideal(t2, 1, 2), frozen({"x0", "x1"})), "T2: R^1_2 differs from frozen value");
  out.expect(ideal_equal(resonance_ideal(t2, 0, 1), frozen({"x0", "x1"})), "T2: R^0_1 differs from frozen value");
  out.expect(exactness_threshold(t2, generic_ranks(t2)) == 2, "T2: exactness threshold is not 2");
  UniversalAomoto t3 = universal_aomoto(exterior_pair(3));
  out.expect(exactness_threshold(t3, generic_ranks(t3)) == 3, "T3: exactness threshold is not 3");
  std::mt19937_64 rng(seed ^ 0x73u);
  for (int n = 0; n < 20; ++n) {
    Vector eta(3, Rational(0));
    while (std::all_of(eta.begin(), eta.end(), [](const Rational& x) { return x == 0; })) {
      for (auto& x : eta) x = static_cast<long>(rng() % 7) - 3;
    }
    for (int i = 0; i < 3; ++i) {
      out.expect(pointwise_resonance(t3, eta, i) == 0, "T3: nonzero cohomology in degree " + std::to_string(i));
    }
  }
  out.detail = out.passed ? "frozen ideals match, 20 points exact, a = 2 and 3" : out.detail;
  return out;
}

std::vector<std::pair<std::string, DglaPair>> section_corpus() {
  Arrangement arr;
  arr.normals = Matrix::from_rows(Field::rationals(), {{1, 0}, {0, 1}, {1, 1}}, 2);
  return {{"T2", exterior_pair(2)},
          {"T3", exterior_pair(3)},
          {"surface2", surface_pair(2)},
          {"os3", cdga_to_pair(orlik_solomon(arr), 1, 1)}};
}

Outcome section_identities(std::uint64_t) {
  Outcome out;
  std::size_t schur = 0;
  for (const auto& [name, p] : section_corpus()) {
    ResonanceReport rep = analyze(p);
    for (const auto& f : rep.flags) out.expect(f != "cm_assumed", name + ": Cohen-Macaulay property not certified");
    for (const auto& v : rep.claims) {
      out.expect(v.holds, name + ": claim " + v.id + " fails (" + v.witness + ")");
      if (v.id.rfind("9.1l", 0) == 0) ++schur;
    }
  }
  out.detail = out.passed ? std::to_string(out.checks) + " claims hold, " + std::to_string(schur) + " Schur values" : out.detail;
  return out;
}

Outcome tor_agreement(std::uint64_t seed) {
  Outcome out;
  std::mt19937_64 rng(seed ^ 0x92u);
  for (const auto& [name, p] : section_corpus()) {
    UniversalAomoto u = universal_aomoto(p);
    const int a = exactness_threshold(u, generic_ranks(u));
    const std::size_t n = u.cone.s->nvars();
    int sampled = 0;
    while (sampled < 10) {
      Vector eta(n);
      for (auto& x : eta) x = static_cast<long>(rng() % 3) - 1;
      if (std::all_of(eta.begin(), eta.end(), [](const Rational& x) { return x == 0; })) continue;
      if (!in_quadratic_cone(u, eta)) continue;
      ++sampled;
      for (int i = 0; a - i >= u.lo(); ++i) {
        TorComparison t = tor_crosscheck(u, a, eta, i);
        out.expect(t.left == t.right, name + ": paths disagree at i = " + std::to_string(i) + " (" +
                                          std::to_string(t.left) + " vs " + std::to_string(t.right) + ")");
      }
    }
  }
  out.detail = out.passed ? std::to_string(out.checks) + " comparisons agree" : out.detail;
  return out;
}

// Largest set of variables containing the support of no generator, by
// enumerating all subsets.
int brute_force_dimension(const std::vector<Monomial>& gens, std::size_t nvars) {
  int best = -1;
  for (std::uint32_t mask = 0; mask < (1u << nvars); ++mask) {
    bool independent = true;
    for (const auto& g : gens) {
      bool inside = true;
      for (std::size_t v = 0; v < nvars; ++v) {
        if (g[v] > 0 && !(mask & (1u << v))) inside = false;
      }
      if (inside) independent = false;
    }
    if (independent) best = std::max(best, __builtin_popcount(mask));
  }
  return best;
}

Outcome kernel_soundness(std::uint64_t seed) {
  Outcome out;
  GroebnerAuditStats stats = groebner_audit_stats();
  std::mt19937_64 rng(seed ^ 0x99u);
  for (int n = 0; n < 20; ++n) {
    const std::size_t nvars = 2 + rng() % 5;
    Ring ring = RingContext::make(Field::rationals(), nvars);
    std::vector<Monomial> gens;
    std::vector<Polynomial> polys;
    const int count = 1 + static_cast<int>(rng() % 5);
    for (int g = 0; g < count; ++g) {
      std::vector<int> e(nvars, 0);
      for (auto& x : e) x = rng() % 3 == 0 ? static_cast<int>(1 + rng() % 2) : 0;
      if (n % 7 == 0 && g == 0) std::fill(e.begin(), e.end(), 0);
      Monomial m(e);
      gens.push_back(m);
      polys.push_back(Polynomial::monomial(ring, m));
    }
    int expected = brute_force_dimension(gens, nvars);
    int got = krull_dimension(Ideal(ring, polys));
    out.expect(got == expected, "monomial ideal " + std::to_string(n) + ": krull " + std::to_string(got) +
                                    " vs oracle " + std::to_string(expected));
  }
  out.expect(stats.failed == 0, std::to_string(stats.failed) + " cached bases fail the Buchberger criterion");
  out.detail = out.passed ? std::to_string(stats.checked) + " audited bases, 20 monomial ideals agree" : out.detail;
  return out;
}

struct Criterion {
  int id;
  const char* title;
  double limit;
  std::function<Outcome(std::uint64_t)> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all{
      {1, "resolution independence of jump ideals", 10, resolution_independence},
      {2, "fiber criterion", 10, fiber_criterion},
      {3, "base change", 10, base_change_commutes},
      {4, "gauge calculus", 30, gauge_calculus},
      {5, "acyclic summand invariance", 30, acyclic_summand},
      {6, "torus oracle", 20, torus_oracle},
      {7, "resonance identities on the corpus", 120, section_identities},
      {8, "two-path Tor agreement", 30, tor_agreement},
      {9, "kernel soundness", 20, kernel_soundness},
  };
  return all;
}

}  // namespace

std::vector<int> criterion_ids() {
  std::vector<int> ids;
  for (const auto& c : criteria()) ids.push_back(c.id);
  return ids;
}

CriterionResult run_criterion(int id, std::uint64_t seed) {
  for (const auto& c : criteria()) {
    if (c.id != id) continue;
    CriterionResult r{c.id, c.title, false, "", 0, c.limit};
    auto start = std::chrono::steady_clock::now();
    try {
      Outcome o = c.run(seed);
      r.passed = o.passed;
      r.detail = o.detail;
    } catch (const std::exception& e) {
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (r.passed && r.seconds > r.limit_seconds) {
      r.passed = false;
      r.detail += "; over the time limit";
    }
    return r;
  }
  throw ValidationError("unknown acceptance criterion " + std::to_string(id));
}

std::vector<CriterionResult> run_all_criteria(std::uint64_t seed, std::ostream& log) {
  set_groebner_audit(true);
  std::vector<CriterionResult> out;
  for (int id : criterion_ids()) {
    out.push_back(run_criterion(id, seed));
    log << format_result(out.back()) << std::endl;
  }
  set_groebner_audit(false);
  return out;
}

std::string format_result(const CriterionResult& r) {
  std::ostringstream os;
  os << (r.passed ? "PASS" : "FAIL") << " criterion " << r.id << " (" << r.title << "): " << r.detail << " ["
     << std::fixed << std::setprecision(2) << r.seconds << "s / " << std::setprecision(0) << r.limit_seconds << "s]";
  return os.str();
}

}  // namespace cjl
