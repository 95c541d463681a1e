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

#include <json.hpp>

#include "cjl/algebra/artin.hpp"
#include "cjl/complexes/free_complex.hpp"
#include "cjl/dgla/augmentation.hpp"
#include "cjl/geometry/analysis.hpp"
#include "cjl/models/orlik_solomon.hpp"

namespace cjl {

/// Keys come out sorted, so dumps are canonical.
using Json = nlohmann::json;

/// Parse errors become ValidationError with the byte offset.
Json parse_json(const std::string& text);

// Readers throw ValidationError prefixed by the JSON pointer of the
// offending value ("/lie/dims/1: ...").

Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j, const std::string& path);

Json ring_to_json(const Ring& ring);
Ring ring_from_json(const Json& j, const std::string& path = "");

Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Field& field, const Json& j, std::size_t rows, std::size_t cols, const std::string& path);

Json poly_matrix_to_json(const PolyMatrix& m);

Json complex_to_json(const FreeComplex& e);
FreeComplex complex_from_json(const Json& j);

Json pair_to_json(const DglaPair& p);
DglaPair pair_from_json(const Json& j);

Json augmentation_to_json(const Augmentation& aug);
Augmentation augmentation_from_json(const Json& j, const Field& field);

Json arrangement_to_json(const Arrangement& arr);
Arrangement arrangement_from_json(const Json& j);

/// An Artin algebra is given by its ring: {"vars":[...],"quotient":[...]}.
ArtinLocalAlgebra artin_from_json(const Json& j);

/// Either an array of polynomial strings or {key: array}. The array may
/// cover only the given degree or the whole space.
Elem elem_from_json(const Json& j, const GradedSpace& space, int degree, const ArtinLocalAlgebra& a,
                    const std::string& key);
Json elem_to_json(const Elem& e);

/// Canonical generator strings.
Json ideal_to_json(const Ideal& ideal);

Json report_to_json(const ResonanceReport& report);

}  // namespace cjl
