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

#pragma once

#include "cjl/dgla/resonance.hpp"

namespace cjl {

/// DGLA map C -> g onto a Lie algebra g concentrated in degree 0.
struct Augmentation {
  std::size_t g_dim = 0;
  /// g_dim x dim C^0.
  Matrix eps0{Field::rationals(), 0, 0};
  /// Structure constants of g on its basis 0..g_dim-1.
  StructureConstants g_bracket;
};

/// Checks that eps is a map of DGLAs, surjective, and injective on H^0(C).
/// Throws ValidationError with a witness otherwise.
void check_augmentation(const Dgla& c, const Augmentation& aug);

struct AugmentedResonance {
  Ring ring;
  Ideal ideal;
  std::size_t extra_variables = 0;
};
/// Resonance ideal extended to S[y0..y{e-1}], e = dim g - dim eps(H^0(C)).
AugmentedResonance augmented_resonance(const DglaPair& p, const Augmentation& aug, int i, int k);

}  // namespace cjl
