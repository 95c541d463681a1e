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

#include "cjl/complexes/free_complex.hpp"

#include <algorithm>

#include "cjl/algebra/errors.hpp"

namespace cjl {

FreeComplex::FreeComplex(Ring ring, int lo, std::vector<std::size_t> ranks, std::vector<PolyMatrix> diffs)
    : ring_(std::move(ring)), lo_(lo), ranks_(std::move(ranks)), diffs_(std::move(diffs)) {
  if (ranks_.empty()) throw ValidationError("complex needs at least one degree");
  if (diffs_.size() + 1 != ranks_.size()) {
    throw ValidationError("complex on " + std::to_string(ranks_.size()) + " degrees needs " +
                          std::to_string(ranks_.size() - 1) + " differentials, got " + std::to_string(diffs_.size()));
  }
  for (std::size_t j = 0; j < diffs_.size(); ++j) {
    if (diffs_[j].rows() != ranks_[j + 1] || diffs_[j].cols() != ranks_[j]) {
      throw ValidationError("differential d^" + std::to_string(lo_ + static_cast<int>(j)) + " has shape " +
                            std::to_string(diffs_[j].rows()) + "x" + std::to_string(diffs_[j].cols()) + ", expected " +
                            std::to_string(ranks_[j + 1]) + "x" + std::to_string(ranks_[j]));
    }
    if (!diffs_[j].ring()->compatible_with(*ring_)) throw RingMismatch("differential over another ring");
    diffs_[j] = diffs_[j].in_ring(ring_);
  }
  int bad = 0;
  if (!squares_to_zero(*this, &bad)) {
    throw ValidationError("d^" + std::to_string(bad + 1) + " o d^" + std::to_string(bad) + " is not zero");
  }
}

FreeComplex FreeComplex::zero(Ring ring, int lo, int hi) {
  std::vector<std::size_t> ranks(static_cast<std::size_t>(hi - lo + 1), 0);
  std::vector<PolyMatrix> diffs;
  for (int i = lo; i < hi; ++i) diffs.emplace_back(ring, 0, 0);
  return FreeComplex(std::move(ring), lo, std::move(ranks), std::move(diffs));
}

std::size_t FreeComplex::rank(int i) const {
  if (i < lo_ || i > hi()) return 0;
  return ranks_[static_cast<std::size_t>(i - lo_)];
}

PolyMatrix FreeComplex::diff(int i) const {
  if (i >= lo_ && i < hi()) return diffs_[static_cast<std::size_t>(i - lo_)];
  return PolyMatrix(ring_, rank(i + 1), rank(i));
}

FreeComplex FreeComplex::widened(int lo, int hi) const {
  if (lo > lo_ || hi < this->hi()) throw ValidationError("widened window must contain the original");
  std::vector<std::size_t> ranks;
  std::vector<PolyMatrix> diffs;
  for (int i = lo; i <= hi; ++i) {
    ranks.push_back(rank(i));
    if (i < hi) diffs.push_back(diff(i));
  }
  return FreeComplex(ring_, lo, std::move(ranks), std::move(diffs));
}

FreeComplex FreeComplex::operator+(const FreeComplex& other) const {
  if (!same_ring(ring_, other.ring_)) throw RingMismatch("direct sum across rings");
  int lo = std::min(lo_, other.lo_);
  int hi = std::max(this->hi(), other.hi());
  std::vector<std::size_t> ranks;
  std::vector<PolyMatrix> diffs;
  for (int i = lo; i <= hi; ++i) {
    ranks.push_back(rank(i) + other.rank(i));
    if (i < hi) diffs.push_back(block_diag(diff(i), other.diff(i)));
  }
  return FreeComplex(ring_, lo, std::move(ranks), std::move(diffs));
}

FreeComplex FreeComplex::mapped(const Ring& target, const std::vector<Polynomial>& images) const {
  std::vector<PolyMatrix> diffs;
  for (const auto& d : diffs_) diffs.push_back(d.mapped(target, images));
  return FreeComplex(target, lo_, ranks_, std::move(diffs));
}

FreeComplex FreeComplex::in_ring(const Ring& target) const {
  std::vector<PolyMatrix> diffs;
  for (const auto& d : diffs_) diffs.push_back(d.in_ring(target));
  return FreeComplex(target, lo_, ranks_, std::move(diffs));
}

FreeComplex trivial_complex(const Ring& ring, int i, const Polynomial& unit) {
  PolyMatrix d(ring, 1, 1);
  d(0, 0) = unit.in_ring(ring);
  return FreeComplex(ring, i, {1, 1}, {d});
}

bool squares_to_zero(const FreeComplex& e, int* failing_degree) {
  for (int i = e.lo(); i + 1 < e.hi(); ++i) {
    if (!(e.diff(i + 1) * e.diff(i)).is_zero()) {
      if (failing_degree) *failing_degree = i;
      return false;
    }
  }
  return true;
}

}  // namespace cjl
