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

#include "cjl/dgla/dgla.hpp"

#include <algorithm>

#include "cjl/algebra/errors.hpp"

namespace cjl {

namespace {

void check_diffs(const GradedSpace& space, std::vector<Matrix>& d, const Field& field, const char* what) {
  const std::size_t steps = space.dims().size() - 1;
  if (d.empty() && steps > 0) d = zero_differentials(field, space);
  if (d.size() != steps) {
    throw ValidationError(std::string(what) + ": expected " + std::to_string(steps) + " differential matrices, got " +
                          std::to_string(d.size()));
  }
  for (std::size_t j = 0; j < d.size(); ++j) {
    int deg = space.lo() + static_cast<int>(j);
    if (d[j].rows() != space.dim(deg + 1) || d[j].cols() != space.dim(deg)) {
      throw ValidationError(std::string(what) + ": differential in degree " + std::to_string(deg) + " has the wrong shape");
    }
    Matrix m(field, d[j].rows(), d[j].cols());
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = field.normalize(d[j](r, c));
    }
    d[j] = std::move(m);
  }
}

void check_table(const GradedSpace& left, const GradedSpace& right, const GradedSpace& out, StructureConstants& sc,
                 const Field& field, const char* what) {
  for (auto it = sc.begin(); it != sc.end();) {
    const auto [x, y] = it->first;
    if (x >= left.total() || y >= right.total()) throw ValidationError(std::string(what) + ": basis index out of range");
    int deg = left.degree_of(x) + right.degree_of(y);
    SparseVec cleaned;
    for (const auto& [k, c] : it->second) {
      if (k >= out.total()) throw ValidationError(std::string(what) + ": output index out of range");
      Rational v = field.normalize(c);
      if (v == 0) continue;
      if (out.degree_of(k) != deg) {
        throw ValidationError(std::string(what) + ": product of " + left.label(x) + " and " + right.label(y) +
                              " leaves degree " + std::to_string(deg));
      }
      cleaned.emplace_back(k, v);
    }
    std::sort(cleaned.begin(), cleaned.end());
    if (cleaned.empty()) {
      it = sc.erase(it);
    } else {
      it->second = std::move(cleaned);
      ++it;
    }
  }
}

}  // namespace

std::vector<Matrix> zero_differentials(const Field& field, const GradedSpace& space) {
  std::vector<Matrix> d;
  for (int i = space.lo(); i < space.hi(); ++i) d.emplace_back(field, space.dim(i + 1), space.dim(i));
  return d;
}

Dgla::Dgla(Field field, GradedSpace space, std::vector<Matrix> d, StructureConstants bracket)
    : field_(field), space_(std::move(space)), d_(std::move(d)), bracket_(std::move(bracket)) {
  check_diffs(space_, d_, field_, "DGLA");
  check_table(space_, space_, space_, bracket_, field_, "DGLA bracket");
}

Matrix Dgla::diff_matrix(int i) const {
  if (i >= space_.lo() && i < space_.hi()) return d_[static_cast<std::size_t>(i - space_.lo())];
  return Matrix(field_, space_.dim(i + 1), space_.dim(i));
}

bool Dgla::has_zero_differential() const {
  for (const auto& m : d_) {
    if (!m.is_zero()) return false;
  }
  return true;
}

Vector Dgla::bracket(const Vector& x, const Vector& y) const {
  return apply_bilinear(field_, bracket_, x, y, space_.total());
}

Elem Dgla::bracket(const Elem& x, const Elem& y) const { return apply_bilinear(bracket_, x, y, space_.total()); }

DglaPair::DglaPair(Dgla lie, GradedSpace module, std::vector<Matrix> dm, StructureConstants action)
    : lie_(std::move(lie)), module_(std::move(module)), dm_(std::move(dm)), action_(std::move(action)) {
  check_diffs(module_, dm_, lie_.field(), "module");
  check_table(lie_.space(), module_, module_, action_, lie_.field(), "module action");
}

Matrix DglaPair::module_diff_matrix(int i) const {
  if (i >= module_.lo() && i < module_.hi()) return dm_[static_cast<std::size_t>(i - module_.lo())];
  return Matrix(field(), module_.dim(i + 1), module_.dim(i));
}

bool DglaPair::has_zero_differentials() const {
  if (!lie_.has_zero_differential()) return false;
  for (const auto& m : dm_) {
    if (!m.is_zero()) return false;
  }
  return true;
}

Vector DglaPair::act(const Vector& c, const Vector& m) const {
  return apply_bilinear(field(), action_, c, m, module_.total());
}

Elem DglaPair::act(const Elem& c, const Elem& m) const { return apply_bilinear(action_, c, m, module_.total()); }

StructureConstants complete_skew(const GradedSpace& space, const Field& field, const StructureConstants& sc) {
  StructureConstants out = sc;
  for (const auto& [xy, val] : sc) {
    auto mirror = std::make_pair(xy.second, xy.first);
    if (out.count(mirror)) continue;
    int sign = (space.degree_of(xy.first) * space.degree_of(xy.second)) % 2 == 0 ? -1 : 1;
    SparseVec v;
    for (const auto& [k, c] : val) v.emplace_back(k, field.normalize(c * sign));
    out.emplace(mirror, std::move(v));
  }
  return out;
}

}  // namespace cjl
