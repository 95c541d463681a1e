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

#include "cjl/complexes/poly_matrix.hpp"

#include "cjl/algebra/errors.hpp"

namespace cjl {

PolyMatrix::PolyMatrix(Ring ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), data_(rows * cols, Polynomial(ring_)) {}

PolyMatrix PolyMatrix::identity(Ring ring, std::size_t n) {
  PolyMatrix m(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Polynomial::constant(ring, 1);
  return m;
}

PolyMatrix PolyMatrix::from_rows(Ring ring, const std::vector<std::vector<Polynomial>>& rows, std::size_t cols) {
  PolyMatrix m(ring, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw ValidationError("matrix row " + std::to_string(r) + " has wrong length");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c].in_ring(ring);
  }
  return m;
}

PolyMatrix PolyMatrix::from_matrix(Ring ring, const Matrix& src) {
  PolyMatrix m(ring, src.rows(), src.cols());
  for (std::size_t r = 0; r < src.rows(); ++r) {
    for (std::size_t c = 0; c < src.cols(); ++c) {
      if (src(r, c) != 0) m(r, c) = Polynomial::constant(ring, src(r, c));
    }
  }
  return m;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& other) const {
  if (cols_ != other.rows_) throw ValidationError("matrix shape mismatch in product");
  if (!same_ring(ring_, other.ring_)) throw RingMismatch("matrix product across rings");
  PolyMatrix out(ring_, rows_, other.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Polynomial& a = (*this)(r, k);
      if (a.is_zero()) continue;
      for (std::size_t c = 0; c < other.cols_; ++c) {
        if (!other(k, c).is_zero()) out(r, c) += a * other(k, c);
      }
    }
  }
  return out;
}

PolyMatrix PolyMatrix::operator+(const PolyMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw ValidationError("matrix shape mismatch in sum");
  PolyMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += other.data_[i];
  return out;
}

PolyMatrix PolyMatrix::operator-(const PolyMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw ValidationError("matrix shape mismatch in difference");
  PolyMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= other.data_[i];
  return out;
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix t(ring_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

bool PolyMatrix::is_zero() const {
  for (const auto& p : data_) {
    if (!p.is_zero()) return false;
  }
  return true;
}

bool PolyMatrix::operator==(const PolyMatrix& other) const {
  return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
}

PolyMatrix PolyMatrix::without_row(std::size_t r) const {
  PolyMatrix out(ring_, rows_ - 1, cols_);
  for (std::size_t i = 0, o = 0; i < rows_; ++i) {
    if (i == r) continue;
    for (std::size_t c = 0; c < cols_; ++c) out(o, c) = (*this)(i, c);
    ++o;
  }
  return out;
}

PolyMatrix PolyMatrix::without_column(std::size_t c) const {
  PolyMatrix out(ring_, rows_, cols_ - 1);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t j = 0, o = 0; j < cols_; ++j) {
      if (j == c) continue;
      out(r, o++) = (*this)(r, j);
    }
  }
  return out;
}

PolyMatrix PolyMatrix::submatrix(const std::vector<std::size_t>& rs, const std::vector<std::size_t>& cs) const {
  PolyMatrix out(ring_, rs.size(), cs.size());
  for (std::size_t r = 0; r < rs.size(); ++r) {
    for (std::size_t c = 0; c < cs.size(); ++c) out(r, c) = (*this)(rs[r], cs[c]);
  }
  return out;
}

PolyMatrix PolyMatrix::mapped(const Ring& target, const std::vector<Polynomial>& images) const {
  PolyMatrix out(target, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i].substitute(target, images);
  return out;
}

PolyMatrix PolyMatrix::in_ring(const Ring& target) const {
  PolyMatrix out(target, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i].in_ring(target);
  return out;
}

Matrix PolyMatrix::evaluate(const std::vector<Rational>& point) const {
  Matrix m(ring_->field(), rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) m(r, c) = (*this)(r, c).evaluate(point);
  }
  return m;
}

Matrix PolyMatrix::constant_part() const {
  Matrix m(ring_->field(), rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) m(r, c) = (*this)(r, c).constant_term();
  }
  return m;
}

std::vector<std::vector<std::string>> PolyMatrix::to_strings() const {
  std::vector<std::vector<std::string>> out(rows_, std::vector<std::string>(cols_));
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out[r][c] = (*this)(r, c).to_string();
  }
  return out;
}

PolyMatrix block_diag(const PolyMatrix& a, const PolyMatrix& b) {
  if (!same_ring(a.ring(), b.ring())) throw RingMismatch("block sum across rings");
  PolyMatrix out(a.ring(), a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
  }
  for (std::size_t r = 0; r < b.rows(); ++r) {
    for (std::size_t c = 0; c < b.cols(); ++c) out(a.rows() + r, a.cols() + c) = b(r, c);
  }
  return out;
}

}  // namespace cjl
