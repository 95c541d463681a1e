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

#include <optional>
#include <vector>

#include "cjl/algebra/field.hpp"

namespace cjl {

using Vector = std::vector<Rational>;

/// Dense matrix over a Field, row-major.
class Matrix {
 public:
  Matrix(Field field, std::size_t rows, std::size_t cols);
  static Matrix identity(Field field, std::size_t n);
  static Matrix from_rows(Field field, const std::vector<Vector>& rows, std::size_t cols);
  static Matrix from_columns(Field field, const std::vector<Vector>& columns, std::size_t rows);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  Matrix transpose() const;
  Matrix operator*(const Matrix& other) const;
  Vector operator*(const Vector& v) const;
  bool is_zero() const;
  bool operator==(const Matrix& other) const;

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rational> data_;
};

struct RowEchelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form; pivots chosen left to right, first nonzero row.
RowEchelon rref(const Matrix& m);
std::size_t rank(const Matrix& m);
/// Basis of the null space {v : m v = 0}, one vector per free column.
std::vector<Vector> kernel(const Matrix& m);
/// Some solution of m x = b, if any.
std::optional<Vector> solve(const Matrix& m, const Vector& b);
/// Indices of a maximal independent subset of the columns (greedy, left to right).
std::vector<std::size_t> independent_columns(const Matrix& m);
/// Vectors extending `sub` (spanning a subspace of `space`) to a basis of
/// span(space); the returned vectors are chosen among `space`.
std::vector<Vector> complement_in(const Field& field, const std::vector<Vector>& sub,
                                  const std::vector<Vector>& space, std::size_t dim);

}  // namespace cjl
