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

#include "cjl/algebra/groebner.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <mutex>
#include <set>

#include "cjl/algebra/errors.hpp"

namespace cjl {

std::size_t default_pair_budget() {
  static const std::size_t budget = [] {
    const char* env = std::getenv("CJL_STEP_BUDGET");
    if (env == nullptr || *env == '\0') return std::size_t{500000};
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || v == 0) return std::size_t{500000};
    return static_cast<std::size_t>(v);
  }();
  return budget;
}

namespace {

std::atomic<bool> g_audit{false};
std::mutex g_audit_mutex;
GroebnerAuditStats g_audit_stats;

using Terms = std::vector<Term>;

// out = f[pos..] - c*m*g, where f[pos] cancels against c*m*lt(g).
Terms cancel_leading(const Field& field, MonomialOrder order, const Terms& f, std::size_t pos,
                     const Rational& c, const Monomial& m, const Terms& g) {
  Terms out;
  out.reserve(f.size() - pos + g.size());
  std::size_t i = pos + 1, j = 1;
  while (i < f.size() || j < g.size()) {
    if (j == g.size()) {
      out.push_back(f[i++]);
      continue;
    }
    Monomial gm = g[j].mono * m;
    if (i == f.size()) {
      out.push_back({std::move(gm), field.neg(field.mul(c, g[j].coef))});
      ++j;
      continue;
    }
    int cmp = compare(order, f[i].mono, gm);
    if (cmp > 0) {
      out.push_back(f[i++]);
    } else if (cmp < 0) {
      out.push_back({std::move(gm), field.neg(field.mul(c, g[j].coef))});
      ++j;
    } else {
      Rational v = field.sub(f[i].coef, field.mul(c, g[j].coef));
      if (v != 0) out.push_back({f[i].mono, std::move(v)});
      ++i;
      ++j;
    }
  }
  return out;
}

// Full reduction of f by the listed term vectors (each nonzero).
Terms reduce_full(const Field& field, MonomialOrder order, Terms f, const std::vector<const Terms*>& basis) {
  Terms done;
  while (!f.empty()) {
    const Term& lt = f.front();
    const Terms* divisor = nullptr;
    for (const Terms* g : basis) {
      if (lt.mono.divisible_by(g->front().mono)) {
        divisor = g;
        break;
      }
    }
    if (divisor == nullptr) {
      done.push_back(lt);
      f.erase(f.begin());
      continue;
    }
    Rational c = field.div(lt.coef, divisor->front().coef);
    Monomial m = lt.mono / divisor->front().mono;
    f = cancel_leading(field, order, f, 0, c, m, *divisor);
  }
  return done;
}

void make_monic(const Field& field, Terms& f) {
  if (f.empty() || f.front().coef == 1) return;
  Rational inv = field.inv(f.front().coef);
  for (auto& t : f) t.coef = field.mul(t.coef, inv);
}

Terms spoly_terms(const Field& field, MonomialOrder order, const Terms& f, const Terms& g) {
  Monomial l = f.front().mono.lcm(g.front().mono);
  Monomial mf = l / f.front().mono;
  Monomial mg = l / g.front().mono;
  Rational cf = field.inv(f.front().coef);
  Rational cg = field.inv(g.front().coef);
  Terms a;
  a.reserve(f.size());
  for (const auto& t : f) a.push_back({t.mono * mf, field.mul(t.coef, cf)});
  Terms b;
  b.reserve(g.size());
  for (const auto& t : g) b.push_back({t.mono * mg, field.mul(t.coef, cg)});
  return sub_scaled(field, order, a, Rational(1), Monomial(l.size()), b);
}

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
  int sugar;
};

struct PairLess {
  MonomialOrder order;
  bool operator()(const Pair& a, const Pair& b) const {
    int c = compare(order, a.lcm, b.lcm);
    if (c != 0) return c < 0;
    if (a.sugar != b.sugar) return a.sugar < b.sugar;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }
};

class Buchberger {
 public:
  Buchberger(const Field& field, MonomialOrder order, std::size_t budget)
      : field_(field), order_(order), budget_(budget), pairs_(PairLess{order}) {}

  void add_input(Terms f, int sugar) {
    std::vector<const Terms*> basis = active_basis();
    f = reduce_full(field_, order_, std::move(f), basis);
    if (f.empty()) return;
    make_monic(field_, f);
    insert(std::move(f), sugar);
  }

  void run() {
    std::size_t processed = 0;
    while (!pairs_.empty()) {
      Pair p = *pairs_.begin();
      pairs_.erase(pairs_.begin());
      if (++processed > budget_) {
        throw ResourceLimitError("Groebner basis exceeded the S-pair budget of " + std::to_string(budget_));
      }
      Terms s = spoly_terms(field_, order_, polys_[p.i], polys_[p.j]);
      s = reduce_full(field_, order_, std::move(s), active_basis());
      if (s.empty()) continue;
      make_monic(field_, s);
      insert(std::move(s), p.sugar);
    }
  }

  std::vector<Terms> reduced() const {
    std::vector<Terms> g;
    for (std::size_t k = 0; k < polys_.size(); ++k) {
      if (active_[k]) g.push_back(polys_[k]);
    }
    std::sort(g.begin(), g.end(),
              [this](const Terms& a, const Terms& b) { return compare(order_, a.front().mono, b.front().mono) > 0; });
    std::vector<Terms> out;
    for (std::size_t k = 0; k < g.size(); ++k) {
      std::vector<const Terms*> others;
      for (std::size_t l = 0; l < g.size(); ++l) {
        if (l != k) others.push_back(&g[l]);
      }
      Terms tail(g[k].begin() + 1, g[k].end());
      tail = reduce_full(field_, order_, std::move(tail), others);
      Terms f;
      f.reserve(tail.size() + 1);
      f.push_back(g[k].front());
      f.insert(f.end(), tail.begin(), tail.end());
      out.push_back(std::move(f));
    }
    return out;
  }

 private:
  std::vector<const Terms*> active_basis() const {
    std::vector<const Terms*> b;
    for (std::size_t k = 0; k < polys_.size(); ++k) {
      if (active_[k]) b.push_back(&polys_[k]);
    }
    return b;
  }

  // Gebauer-Moeller update with the new element h.
  void insert(Terms h, int sugar) {
    const std::size_t hi = polys_.size();
    const Monomial lh = h.front().mono;
    polys_.push_back(std::move(h));
    sugar_.push_back(sugar);
    active_.push_back(true);

    std::vector<Pair> candidates;
    for (std::size_t k = 0; k < hi; ++k) {
      if (!active_[k]) continue;
      candidates.push_back(make_pair(k, hi));
    }
    std::vector<Pair> kept;
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      const Pair& p = candidates[c];
      const Monomial& lk = polys_[p.i].front().mono;
      bool keep = lk.coprime(lh);
      if (!keep) {
        keep = true;
        for (std::size_t o = c + 1; o < candidates.size() && keep; ++o) {
          if (p.lcm.divisible_by(candidates[o].lcm)) keep = false;
        }
        for (const Pair& q : kept) {
          if (!keep) break;
          if (p.lcm.divisible_by(q.lcm)) keep = false;
        }
      }
      if (keep) kept.push_back(p);
    }

    std::set<Pair, PairLess> next(PairLess{order_});
    for (const Pair& p : pairs_) {
      bool drop = p.lcm.divisible_by(lh) && polys_[p.i].front().mono.lcm(lh) != p.lcm &&
                  polys_[p.j].front().mono.lcm(lh) != p.lcm;
      if (!drop) next.insert(p);
    }
    for (const Pair& p : kept) {
      if (!polys_[p.i].front().mono.coprime(lh)) next.insert(p);
    }
    pairs_ = std::move(next);

    for (std::size_t k = 0; k < hi; ++k) {
      if (active_[k] && polys_[k].front().mono.divisible_by(lh)) active_[k] = false;
    }
  }

  Pair make_pair(std::size_t i, std::size_t j) const {
    const Monomial& a = polys_[i].front().mono;
    const Monomial& b = polys_[j].front().mono;
    Monomial l = a.lcm(b);
    int s = std::max(sugar_[i] + (l.degree() - a.degree()), sugar_[j] + (l.degree() - b.degree()));
    return Pair{i, j, std::move(l), s};
  }

  Field field_;
  MonomialOrder order_;
  std::size_t budget_;
  std::vector<Terms> polys_;
  std::vector<int> sugar_;
  std::vector<bool> active_;
  std::set<Pair, PairLess> pairs_;
};

}  // namespace

std::vector<Term> reduce_terms(const Field& field, MonomialOrder order, std::vector<Term> f,
                               const std::vector<Polynomial>& basis) {
  std::vector<const Terms*> b;
  for (const auto& g : basis) {
    if (!g.is_zero()) b.push_back(&g.terms());
  }
  return reduce_full(field, order, std::move(f), b);
}

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis) {
  const Ring& ring = f.ring();
  for (const auto& g : basis) {
    if (!g.ring()->compatible_with(*ring)) throw RingMismatch("normal form against a basis from another ring");
  }
  auto r = reduce_terms(ring->field(), ring->order(), f.terms(), basis);
  return Polynomial::unchecked(ring, std::move(r));
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  if (!same_ring(f.ring(), g.ring())) throw RingMismatch();
  if (f.is_zero() || g.is_zero()) return Polynomial(f.ring());
  const Ring& ring = f.ring();
  return Polynomial::from_terms(ring, spoly_terms(ring->field(), ring->order(), f.terms(), g.terms()));
}

std::vector<Polynomial> reduced_groebner(const std::vector<Polynomial>& gens, const GroebnerOptions& options) {
  if (gens.empty()) return {};
  Ring ring = gens.front().ring()->base();
  for (const auto& g : gens) {
    if (!g.ring()->compatible_with(*ring)) throw RingMismatch("generators from different rings");
  }
  Buchberger bb(ring->field(), ring->order(), options.max_pairs);
  // Lower-degree inputs first keeps the run deterministic and cheap.
  std::vector<const Polynomial*> order;
  for (const auto& g : gens) {
    if (!g.is_zero()) order.push_back(&g);
  }
  std::stable_sort(order.begin(), order.end(), [&](const Polynomial* a, const Polynomial* b) {
    return compare(ring->order(), a->lm(), b->lm()) < 0;
  });
  for (const Polynomial* g : order) bb.add_input(g->terms(), g->total_degree());
  bb.run();
  std::vector<Polynomial> out;
  for (auto& t : bb.reduced()) out.push_back(Polynomial::unchecked(ring, std::move(t)));
  if (g_audit.load()) {
    bool ok = satisfies_buchberger_criterion(out);
    std::lock_guard<std::mutex> lock(g_audit_mutex);
    ++g_audit_stats.checked;
    if (!ok) ++g_audit_stats.failed;
  }
  return out;
}

bool satisfies_buchberger_criterion(const std::vector<Polynomial>& basis) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      Polynomial s = s_polynomial(basis[i], basis[j]);
      if (!normal_form(s, basis).is_zero()) return false;
    }
  }
  return true;
}

void set_groebner_audit(bool enabled) { g_audit.store(enabled); }

GroebnerAuditStats groebner_audit_stats() {
  std::lock_guard<std::mutex> lock(g_audit_mutex);
  return g_audit_stats;
}

}  // namespace cjl
