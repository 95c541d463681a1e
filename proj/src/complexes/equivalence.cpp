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

#include "cjl/complexes/equivalence.hpp"

#include <algorithm>

#include "cjl/algebra/errors.hpp"

namespace cjl {

ComplexMap::ComplexMap(FreeComplex source, FreeComplex target, std::map<int, PolyMatrix> components)
    : source_(std::move(source)), target_(std::move(target)), components_(std::move(components)) {
  if (!same_ring(source_.ring(), target_.ring())) throw RingMismatch("chain map across rings");
  for (auto& [i, m] : components_) {
    if (m.rows() != target_.rank(i) || m.cols() != source_.rank(i)) {
      throw ValidationError("chain map component in degree " + std::to_string(i) + " has the wrong shape");
    }
    m = m.in_ring(source_.ring());
  }
  int lo = std::min(source_.lo(), target_.lo()) - 1;
  int hi = std::max(source_.hi(), target_.hi());
  for (int i = lo; i <= hi; ++i) {
    if (!(component(i + 1) * source_.diff(i) == target_.diff(i) * component(i))) {
      throw ValidationError("not a chain map: g d != d g in degree " + std::to_string(i));
    }
  }
}

ComplexMap ComplexMap::identity(const FreeComplex& e) {
  std::map<int, PolyMatrix> c;
  for (int i = e.lo(); i <= e.hi(); ++i) c.emplace(i, PolyMatrix::identity(e.ring(), e.rank(i)));
  return ComplexMap(e, e, std::move(c));
}

PolyMatrix ComplexMap::component(int i) const {
  auto it = components_.find(i);
  if (it != components_.end()) return it->second;
  return PolyMatrix(source_.ring(), target_.rank(i), source_.rank(i));
}

Matrix flatten(const ArtinLocalAlgebra& a, const PolyMatrix& m) {
  const std::size_t n = a.dim();
  Matrix out(a.field(), m.rows() * n, m.cols() * n);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (m(r, c).is_zero()) continue;
      for (std::size_t b = 0; b < n; ++b) {
        Vector v = a.coordinates(m(r, c) * a.basis_element(b));
        for (std::size_t k = 0; k < n; ++k) out(r * n + k, c * n + b) = v[k];
      }
    }
  }
  return out;
}

namespace {

struct FlatData {
  std::vector<Vector> cycles;
  std::vector<Vector> boundaries;
  std::size_t dim = 0;
};

FlatData flat_degree(const ArtinLocalAlgebra& a, const FreeComplex& e, int i) {
  FlatData f;
  f.dim = e.rank(i) * a.dim();
  Matrix d = flatten(a, e.diff(i));
  if (f.dim > 0) {
    if (d.rows() == 0) {
      for (std::size_t k = 0; k < f.dim; ++k) {
        Vector v(f.dim, Rational(0));
        v[k] = 1;
        f.cycles.push_back(v);
      }
    } else {
      f.cycles = kernel(d);
    }
  }
  Matrix prev = flatten(a, e.diff(i - 1));
  if (prev.cols() > 0 && prev.rows() > 0) {
    for (auto c : independent_columns(prev)) f.boundaries.push_back(prev.column(c));
  }
  return f;
}

std::size_t span_dim(const Field& field, const std::vector<Vector>& vs, std::size_t dim) {
  if (vs.empty() || dim == 0) return 0;
  return rank(Matrix::from_columns(field, vs, dim));
}

}  // namespace

std::size_t flat_cohomology_rank(const ArtinLocalAlgebra& a, const FreeComplex& e, int i) {
  FlatData f = flat_degree(a, e, i);
  return f.cycles.size() - f.boundaries.size();
}

bool is_q_equivalence(const ArtinLocalAlgebra& a, const ComplexMap& g, std::optional<int> q) {
  if (!same_ring(a.ring(), g.source().ring())) throw RingMismatch("chain map is not over this algebra");
  const Field& field = a.field();
  int lo = std::min(g.source().lo(), g.target().lo());
  int hi = std::max(g.source().hi(), g.target().hi());
  int last = q ? std::min(*q + 1, hi) : hi;
  for (int i = lo; i <= last; ++i) {
    FlatData s = flat_degree(a, g.source(), i);
    FlatData t = flat_degree(a, g.target(), i);
    Matrix gi = flatten(a, g.component(i));
    std::vector<Vector> images;
    for (const auto& z : s.cycles) images.push_back(gi * z);
    // Injectivity: dim of {z : g z in B_t} must equal dim B_s.
    std::vector<Vector> cols = images;
    cols.insert(cols.end(), t.boundaries.begin(), t.boundaries.end());
    std::size_t image_plus_b = span_dim(field, cols, t.dim);
    std::size_t preimage_dim = s.cycles.size() - (image_plus_b - t.boundaries.size());
    if (preimage_dim != s.boundaries.size()) return false;
    bool iso_required = !q || i <= *q;
    if (iso_required && image_plus_b != t.cycles.size()) return false;
  }
  return true;
}

}  // namespace cjl
