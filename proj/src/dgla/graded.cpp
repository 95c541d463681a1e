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

#include "cjl/dgla/graded.hpp"

#include "cjl/algebra/errors.hpp"

namespace cjl {

GradedSpace::GradedSpace(int lo, std::vector<std::size_t> dims, std::vector<std::string> labels)
    : lo_(lo), dims_(std::move(dims)), labels_(std::move(labels)) {
  if (dims_.empty()) dims_.push_back(0);
  offsets_.assign(dims_.size() + 1, 0);
  for (std::size_t j = 0; j < dims_.size(); ++j) offsets_[j + 1] = offsets_[j] + dims_[j];
  total_ = offsets_.back();
  if (labels_.empty()) {
    for (std::size_t j = 0; j < dims_.size(); ++j) {
      for (std::size_t a = 0; a < dims_[j]; ++a) {
        labels_.push_back("e" + std::to_string(lo_ + static_cast<int>(j)) + "_" + std::to_string(a));
      }
    }
  }
  if (labels_.size() != total_) throw ValidationError("graded space has " + std::to_string(total_) + " basis vectors but " + std::to_string(labels_.size()) + " labels");
}

std::size_t GradedSpace::dim(int degree) const {
  if (degree < lo_ || degree > hi()) return 0;
  return dims_[static_cast<std::size_t>(degree - lo_)];
}

std::size_t GradedSpace::offset(int degree) const {
  if (degree < lo_) return 0;
  if (degree > hi()) return total_;
  return offsets_[static_cast<std::size_t>(degree - lo_)];
}

std::size_t GradedSpace::global(int degree, std::size_t local) const {
  if (local >= dim(degree)) {
    throw ValidationError("basis index " + std::to_string(local) + " out of range in degree " + std::to_string(degree));
  }
  return offset(degree) + local;
}

int GradedSpace::degree_of(std::size_t g) const {
  if (g >= total_) throw ValidationError("global basis index out of range");
  for (std::size_t j = 0; j < dims_.size(); ++j) {
    if (g < offsets_[j + 1]) return lo_ + static_cast<int>(j);
  }
  return hi();
}

SparseVec make_sparse(const Vector& dense) {
  SparseVec s;
  for (std::size_t i = 0; i < dense.size(); ++i) {
    if (dense[i] != 0) s.emplace_back(i, dense[i]);
  }
  return s;
}

Vector make_dense(const SparseVec& sparse, std::size_t size) {
  Vector v(size, Rational(0));
  for (const auto& [i, c] : sparse) v.at(i) = c;
  return v;
}

Elem zero_elem(const Ring& ring, std::size_t size) { return Elem(size, Polynomial(ring)); }

Elem elem_add(const Elem& a, const Elem& b) {
  if (a.size() != b.size()) throw ValidationError("element size mismatch");
  Elem out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
  return out;
}

Elem elem_sub(const Elem& a, const Elem& b) {
  if (a.size() != b.size()) throw ValidationError("element size mismatch");
  Elem out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] -= b[i];
  return out;
}

Elem elem_scale(const Elem& a, const Polynomial& c) {
  Elem out = a;
  for (auto& x : out) {
    if (!x.is_zero()) x = x * c;
  }
  return out;
}

Elem elem_scale(const Elem& a, const Rational& c) {
  Elem out = a;
  for (auto& x : out) x = x * c;
  return out;
}

bool elem_is_zero(const Elem& a) {
  for (const auto& x : a) {
    if (!x.is_zero()) return false;
  }
  return true;
}

Elem elem_from_vector(const Ring& ring, const Vector& v) {
  Elem out;
  out.reserve(v.size());
  for (const auto& c : v) out.push_back(Polynomial::constant(ring, c));
  return out;
}

Elem apply_bilinear(const StructureConstants& sc, const Elem& a, const Elem& b, std::size_t out_size) {
  if (a.empty() && b.empty()) throw ValidationError("cannot infer coefficient ring");
  const Ring& ring = a.empty() ? b.front().ring() : a.front().ring();
  Elem out = zero_elem(ring, out_size);
  for (const auto& [xy, val] : sc) {
    const Polynomial& ca = a.at(xy.first);
    if (ca.is_zero()) continue;
    const Polynomial& cb = b.at(xy.second);
    if (cb.is_zero()) continue;
    Polynomial p = ca * cb;
    if (p.is_zero()) continue;
    for (const auto& [k, c] : val) out.at(k) += p * c;
  }
  return out;
}

Vector apply_bilinear(const Field& field, const StructureConstants& sc, const Vector& a, const Vector& b,
                      std::size_t out_size) {
  Vector out(out_size, Rational(0));
  for (const auto& [xy, val] : sc) {
    const Rational& ca = a.at(xy.first);
    if (ca == 0) continue;
    const Rational& cb = b.at(xy.second);
    if (cb == 0) continue;
    Rational p = field.mul(ca, cb);
    for (const auto& [k, c] : val) out.at(k) = field.add(out.at(k), field.mul(p, c));
  }
  return out;
}

Elem apply_graded_linear(const GradedSpace& space, const std::vector<Matrix>& mats, const Elem& a) {
  if (a.size() != space.total()) throw ValidationError("element size mismatch");
  if (a.empty()) return a;
  Elem out = zero_elem(a.front().ring(), space.total());
  for (std::size_t j = 0; j < mats.size(); ++j) {
    int deg = space.lo() + static_cast<int>(j);
    const Matrix& m = mats[j];
    std::size_t src = space.offset(deg), dst = space.offset(deg + 1);
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (a[src + c].is_zero()) continue;
      for (std::size_t r = 0; r < m.rows(); ++r) {
        if (m(r, c) != 0) out[dst + r] += a[src + c] * m(r, c);
      }
    }
  }
  return out;
}

Vector apply_graded_linear(const GradedSpace& space, const std::vector<Matrix>& mats, const Vector& a) {
  if (a.size() != space.total()) throw ValidationError("vector size mismatch");
  Vector out(space.total(), Rational(0));
  for (std::size_t j = 0; j < mats.size(); ++j) {
    int deg = space.lo() + static_cast<int>(j);
    const Matrix& m = mats[j];
    const Field& f = m.field();
    std::size_t src = space.offset(deg), dst = space.offset(deg + 1);
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (a[src + c] == 0) continue;
      for (std::size_t r = 0; r < m.rows(); ++r) {
        if (m(r, c) != 0) out[dst + r] = f.add(out[dst + r], f.mul(a[src + c], m(r, c)));
      }
    }
  }
  return out;
}

}  // namespace cjl
