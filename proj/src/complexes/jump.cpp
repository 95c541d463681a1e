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

#include "cjl/complexes/jump.hpp"

#include <optional>

#include "cjl/algebra/errors.hpp"

namespace cjl {

Ideal jump_ideal(const FreeComplex& e, int i, int k) {
  if (k <= 0) throw ValidationError("jump index k must be positive");
  int r = static_cast<int>(e.rank(i)) - k + 1;
  return block_diag_determinantal(e.diff(i - 1), e.diff(i), r);
}

Ideal jump_ideal(const ArtinLocalAlgebra& a, const FreeComplex& e, int i, int k) {
  return jump_ideal(minimize_complex(a, e), i, k);
}

JumpIdealTable jump_table(const FreeComplex& e, int kmax) {
  JumpIdealTable t;
  for (int i = e.lo(); i <= e.hi(); ++i) {
    for (int k = 1; k <= kmax; ++k) t.emplace(std::make_pair(i, k), jump_ideal(e, i, k));
  }
  return t;
}

FreeComplex minimize_complex(const ArtinLocalAlgebra& a, const FreeComplex& e) {
  if (!same_ring(a.ring(), e.ring())) throw RingMismatch("complex is not over this algebra");
  std::vector<std::size_t> ranks = e.ranks();
  std::vector<PolyMatrix> diffs = e.diffs();
  const int lo = e.lo();
  struct Pivot {
    std::size_t j, r, c;
  };
  auto find_pivot = [&]() -> std::optional<Pivot> {
    for (std::size_t j = 0; j < diffs.size(); ++j) {
      for (std::size_t r = 0; r < diffs[j].rows(); ++r) {
        for (std::size_t c = 0; c < diffs[j].cols(); ++c) {
          if (a.is_unit(diffs[j](r, c))) return Pivot{j, r, c};
        }
      }
    }
    return std::nullopt;
  };
  while (auto p = find_pivot()) {
    const std::size_t j = p->j, pr = p->r, pc = p->c;
    const PolyMatrix& d = diffs[j];
    Polynomial uinv = a.inverse(d(pr, pc));
    PolyMatrix schur(e.ring(), d.rows() - 1, d.cols() - 1);
    for (std::size_t s = 0, os = 0; s < d.rows(); ++s) {
      if (s == pr) continue;
      Polynomial f = d(s, pc) * uinv;
      for (std::size_t t = 0, ot = 0; t < d.cols(); ++t) {
        if (t == pc) continue;
        schur(os, ot++) = f.is_zero() ? d(s, t) : d(s, t) - f * d(pr, t);
      }
      ++os;
    }
    diffs[j] = std::move(schur);
    if (j > 0) diffs[j - 1] = diffs[j - 1].without_row(pc);
    if (j + 1 < diffs.size()) diffs[j + 1] = diffs[j + 1].without_column(pr);
    --ranks[j];
    --ranks[j + 1];
  }
  return FreeComplex(e.ring(), lo, std::move(ranks), std::move(diffs));
}

RingMap RingMap::identity(const Ring& ring) { return projection(ring, ring); }

RingMap RingMap::projection(const Ring& source, const Ring& target) {
  if (!source->compatible_with(*target)) throw RingMismatch("projection between incompatible rings");
  RingMap m{source, target, {}};
  for (std::size_t v = 0; v < source->nvars(); ++v) m.images.push_back(Polynomial::variable(target, v));
  m.check_well_defined();
  return m;
}

RingMap RingMap::residue(const Ring& source) {
  Ring k = RingContext::make(source->field(), std::vector<std::string>{}, source->order());
  RingMap m{source, k, std::vector<Polynomial>(source->nvars(), Polynomial(k))};
  m.check_well_defined();
  return m;
}

Polynomial RingMap::operator()(const Polynomial& f) const {
  if (!same_ring(f.ring(), source)) throw RingMismatch("ring map applied to a foreign polynomial");
  return f.substitute(target, images);
}

void RingMap::check_well_defined() const {
  if (images.size() != source->nvars()) throw ValidationError("ring map needs one image per source variable");
  for (const auto& im : images) {
    if (!same_ring(im.ring(), target)) throw RingMismatch("ring map image outside the target");
  }
  for (const auto& rel : source->quotient_basis()) {
    if (!rel.substitute(target, images).is_zero()) {
      throw ValidationError("ring map is not well defined: relation " + rel.to_string() + " does not map to zero");
    }
  }
}

FreeComplex base_change(const FreeComplex& e, const RingMap& phi) {
  if (!same_ring(e.ring(), phi.source)) throw RingMismatch("base change from the wrong ring");
  phi.check_well_defined();
  return e.mapped(phi.target, phi.images);
}

Ideal extend_ideal(const Ideal& ideal, const RingMap& phi) {
  if (!same_ring(ideal.ring(), phi.source)) throw RingMismatch("extension from the wrong ring");
  return ideal.mapped(phi.target, phi.images);
}

std::size_t cohomology_rank(const std::vector<std::size_t>& ranks, const std::vector<Matrix>& diffs, int lo, int i) {
  int hi = lo + static_cast<int>(ranks.size()) - 1;
  if (i < lo || i > hi) return 0;
  std::size_t idx = static_cast<std::size_t>(i - lo);
  std::size_t out = ranks[idx];
  if (i < hi) out -= rank(diffs[idx]);
  if (i > lo) out -= rank(diffs[idx - 1]);
  return out;
}

std::size_t fiber_cohomology_rank(const ArtinLocalAlgebra& a, const FreeComplex& e, int i) {
  if (!same_ring(a.ring(), e.ring())) throw RingMismatch("complex is not over this algebra");
  std::vector<Matrix> diffs;
  for (const auto& d : e.diffs()) diffs.push_back(d.constant_part());
  return cohomology_rank(e.ranks(), diffs, e.lo(), i);
}

}  // namespace cjl
