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

#include <stdexcept>
#include <string>

namespace cjl {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input rejected: malformed data, broken axioms, mismatched rings.
/// The CLI maps this to exit status 2.
class ValidationError : public Error {
 public:
  using Error::Error;
};

class RingMismatch : public ValidationError {
 public:
  RingMismatch() : ValidationError("ring mismatch") {}
  explicit RingMismatch(const std::string& what) : ValidationError("ring mismatch: " + what) {}
};

/// A configured work cap was exceeded. Never a silent wrong answer; the CLI
/// maps this to exit status 3.
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

}  // namespace cjl
