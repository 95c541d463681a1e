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

#include "cjl/complexes/jump.hpp"
#include "cjl/dgla/tensor.hpp"

namespace cjl {

/// (M tensor A, d_M tensor id + omega .) on the module window. Throws
/// ValidationError when omega is not Maurer-Cartan.
FreeComplex aomoto_complex(const DglaPair& p, const ArtinLocalAlgebra& a, const Elem& omega);

/// True iff J^i_k of the minimized Aomoto complex is the zero ideal of A.
bool def_jump_test(const DglaPair& p, const ArtinLocalAlgebra& a, const Elem& omega, int i, int k);

}  // namespace cjl
