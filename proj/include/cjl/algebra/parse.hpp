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

#include <string>
#include <vector>

#include "cjl/algebra/polynomial.hpp"

namespace cjl {

/// Parses text such as "3/2*x0^2*x1 - x2 + 1" or "(x+y)^3*(x-y)" in `ring`.
/// Division is only allowed by nonzero constants. Unknown names throw
/// ValidationError.
Polynomial parse_polynomial(const Ring& ring, const std::string& text);

std::vector<Polynomial> parse_polynomials(const Ring& ring, const std::vector<std::string>& texts);

}  // namespace cjl
