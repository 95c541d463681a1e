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

#include "cjl/algebra/linalg.hpp"
#include "cjl/algebra/polynomial.hpp"

namespace cjl {

/// Dense matrix with entries in a RingContext.
class PolyMatrix {
 public:
  PolyMatrix(Ring ring, std::size_t rows, std::size_t cols);
  static PolyMatrix identity(Ring ring, std::size_t n);
  static PolyMatrix from_rows(Ring ring, const std::vector<std::vector<Polynomial>>& rows, std::size_t cols);
  /// Constant matrix over the ring's field.
  static PolyMatrix from_matrix(Ring ring, const Matrix& m);

  const Ring& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Polynomial& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Polynomial& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  PolyMatrix operator*(const PolyMatrix& other) const;
  PolyMatrix operator+(const PolyMatrix& other) const;
  PolyMatrix operator-(const PolyMatrix& other) const;
  PolyMatrix transpose() const;
  bool is_zero() const;
  bool operator==(const PolyMatrix& other) const;

  PolyMatrix without_row(std::size_t r) const;
  PolyMatrix without_column(std::size_t c) const;
  PolyMatrix submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;

  /// Entry-wise image under x_i -> images[i] (images live in target).
  PolyMatrix mapped(const Ring& target, const std::vector<Polynomial>& images) const;
  PolyMatrix in_ring(const Ring& target) const;
  /// Entry-wise evaluation at a point (ring without quotient or a field point).
  Matrix evaluate(const std::vector<Rational>& point) const;
  /// Constant terms of all entries.
  Matrix constant_part() const;

  std::vector<std::vector<std::string>> to_strings() const;

 private:
  Ring ring_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Polynomial> data_;
};

/// diag(a, b).
PolyMatrix block_diag(const PolyMatrix& a, const PolyMatrix& b);

}  // namespace cjl
