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

#include "cjl/dgla/dgla.hpp"

namespace cjl {

struct AxiomViolation {
  std::string axiom;
  /// Labels of the basis vectors exhibiting the failure.
  std::vector<std::string> witness;
  std::string detail;
};

struct AxiomReport {
  std::vector<AxiomViolation> violations;
  bool ok() const { return violations.empty(); }
  std::string summary() const;
};

/// d^2 = 0, graded skew-symmetry, graded Jacobi and Leibniz on the basis.
AxiomReport check_dgla(const Dgla& c);
/// check_dgla plus the module axioms.
AxiomReport check_pair(const DglaPair& p);

/// Throws ValidationError with the first witness if the report is not ok.
void require_valid(const AxiomReport& report, const std::string& what);

}  // namespace cjl
