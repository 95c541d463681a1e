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

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace cjl {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0;
  double limit_seconds = 0;
};

/// Criteria 1..9.
std::vector<int> criterion_ids();
CriterionResult run_criterion(int id, std::uint64_t seed);
/// Runs every criterion with the Groebner audit enabled and writes one
/// line per criterion to `log` as it finishes.
std::vector<CriterionResult> run_all_criteria(std::uint64_t seed, std::ostream& log);
std::string format_result(const CriterionResult& r);

}  // namespace cjl
