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

#include "cjl/dgla/augmentation.hpp"

#include "cjl/algebra/errors.hpp"

namespace cjl {

void check_augmentation(const Dgla& c, const Augmentation& aug) {
  const GradedSpace& s = c.space();
  const Field& f = c.field();
  if (aug.eps0.rows() != aug.g_dim || aug.eps0.cols() != s.dim(0)) {
    throw ValidationError("eps0 must be " + std::to_string(aug.g_dim) + "x" + std::to_string(s.dim(0)));
  }
  if (rank(aug.eps0) != aug.g_dim) throw ValidationError("eps0 is not surjective onto g");
  if (s.dim(-1) > 0) {
    Matrix comp = aug.eps0 * c.diff_matrix(-1);
    for (std::size_t b = 0; b < comp.cols(); ++b) {
      for (std::size_t r = 0; r < comp.rows(); ++r) {
        if (comp(r, b) != 0) throw ValidationError("eps0 does not vanish on d(" + s.label(s.global(-1, b)) + ")");
      }
    }
  }
  auto eps = [&](const Vector& x) {
    Vector v(s.dim(0));
    for (std::size_t l = 0; l < s.dim(0); ++l) v[l] = x[s.global(0, l)];
    return aug.eps0 * v;
  };
  for (std::size_t a = 0; a < s.dim(0); ++a) {
    for (std::size_t b = 0; b < s.dim(0); ++b) {
      Vector x(s.total(), Rational(0)), y(s.total(), Rational(0));
      x[s.global(0, a)] = 1;
      y[s.global(0, b)] = 1;
      Vector lhs = eps(c.bracket(x, y));
      Vector rhs = apply_bilinear(f, aug.g_bracket, eps(x), eps(y), aug.g_dim);
      if (lhs != rhs) {
        throw ValidationError("eps does not preserve the bracket of " + s.label(s.global(0, a)) + " and " +
                              s.label(s.global(0, b)));
      }
    }
  }
  CohomologyDgla h = cohomology_dgla(c);
  const std::size_t h0 = h.dgla.space().dim(0);
  std::vector<Vector> images;
  for (std::size_t k = 0; k < h0; ++k) images.push_back(eps(h.data.representative(h.dgla.space().global(0, k))));
  if (h0 > 0 && rank(Matrix::from_columns(f, images, aug.g_dim)) != h0) {
    throw ValidationError("eps0 is not injective on H^0(C)");
  }
}

AugmentedResonance augmented_resonance(const DglaPair& p, const Augmentation& aug, int i, int k) {
  check_augmentation(p.lie(), aug);
  CohomologyDgla h = cohomology_dgla(p.lie());
  std::size_t extra = aug.g_dim - h.dgla.space().dim(0);
  Ideal base = resonance_ideal(p, i, k);
  std::vector<std::string> names;
  for (std::size_t j = 0; j < extra; ++j) names.push_back("y" + std::to_string(j));
  Ring ring = base.ring()->extended(names);
  std::vector<Polynomial> gens;
  for (const auto& g : base.groebner()) gens.push_back(embed(g, ring));
  return {ring, Ideal(ring, std::move(gens)), extra};
}

}  // namespace cjl
