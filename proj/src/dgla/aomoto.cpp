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

#include "cjl/dgla/aomoto.hpp"

#include "cjl/algebra/errors.hpp"

namespace cjl {

FreeComplex aomoto_complex(const DglaPair& p, const ArtinLocalAlgebra& a, const Elem& omega) {
  if (!maurer_cartan_check(p.lie(), a, omega)) throw ValidationError("omega does not satisfy the Maurer-Cartan equation");
  const GradedSpace& ms = p.module();
  const Ring& ring = a.ring();
  std::vector<std::size_t> ranks = ms.dims();
  std::vector<PolyMatrix> diffs;
  for (int i = ms.lo(); i < ms.hi(); ++i) {
    PolyMatrix d = PolyMatrix::from_matrix(ring, p.module_diff_matrix(i));
    for (std::size_t b = 0; b < ms.dim(i); ++b) {
      Elem xi = zero_elem(ring, ms.total());
      xi[ms.global(i, b)] = a.one();
      Elem img = p.act(omega, xi);
      for (std::size_t r = 0; r < ms.dim(i + 1); ++r) d(r, b) += img[ms.global(i + 1, r)];
    }
    diffs.push_back(std::move(d));
  }
  return FreeComplex(ring, ms.lo(), std::move(ranks), std::move(diffs));
}

bool def_jump_test(const DglaPair& p, const ArtinLocalAlgebra& a, const Elem& omega, int i, int k) {
  return jump_ideal(a, aomoto_complex(p, a, omega), i, k).is_zero();
}

}  // namespace cjl
