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

#include <cstddef>
#include <vector>

#include "cjl/algebra/polynomial.hpp"

namespace cjl {

/// Cap on S-pairs examined per Buchberger run. Read once from the
/// CJL_STEP_BUDGET environment variable; defaults to 500000.
std::size_t default_pair_budget();

struct GroebnerOptions {
  std::size_t max_pairs = default_pair_budget();
};

/// Full reduction of `f` by `basis` (monic, sorted in the same order).
std::vector<Term> reduce_terms(const Field& field, MonomialOrder order, std::vector<Term> f,
                               const std::vector<Polynomial>& basis);

/// Remainder of `f` by `basis`; the result lives in f.ring().
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

/// Reduced Groebner basis of (gens) in their common quotient-free ring.
/// Output is monic and sorted by leading monomial, largest first. The zero
/// ideal gives an empty basis. Throws ResourceLimitError when the S-pair
/// budget is exhausted.
std::vector<Polynomial> reduced_groebner(const std::vector<Polynomial>& gens,
                                         const GroebnerOptions& options = {});

/// Every S-polynomial of `basis` reduces to zero modulo `basis`.
bool satisfies_buchberger_criterion(const std::vector<Polynomial>& basis);

/// Test hook: when enabled, every basis returned by reduced_groebner is
/// checked against the Buchberger criterion and the outcome is counted.
struct GroebnerAuditStats {
  std::size_t checked = 0;
  std::size_t failed = 0;
};
void set_groebner_audit(bool enabled);
GroebnerAuditStats groebner_audit_stats();

}  // namespace cjl
