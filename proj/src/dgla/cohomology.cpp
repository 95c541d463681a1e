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

#include "cjl/dgla/cohomology.hpp"

#include <functional>

#include "cjl/algebra/errors.hpp"

namespace cjl {

GradedCohomology::GradedCohomology(const Field& field, const GradedSpace& space, const std::vector<Matrix>& d)
    : field_(field), original_(space), d_(d) {
  std::vector<std::size_t> hdims;
  std::vector<std::string> labels;
  boundaries_.resize(space.dims().size());
  for (int deg = space.lo(); deg <= space.hi(); ++deg) {
    const std::size_t n = space.dim(deg);
    const std::size_t j = static_cast<std::size_t>(deg - space.lo());
    std::vector<Vector> cycles;
    if (deg < space.hi() && space.dim(deg + 1) > 0) {
      cycles = kernel(d[j]);
    } else {
      for (std::size_t a = 0; a < n; ++a) {
        Vector v(n, Rational(0));
        v[a] = 1;
        cycles.push_back(v);
      }
    }
    std::vector<Vector> bounds;
    if (deg > space.lo() && n > 0) {
      const Matrix& prev = d[j - 1];
      if (prev.cols() > 0) {
        for (auto c : independent_columns(prev)) bounds.push_back(prev.column(c));
      }
    }
    std::vector<Vector> reps = complement_in(field, bounds, cycles, n);
    hdims.push_back(reps.size());
    for (std::size_t k = 0; k < reps.size(); ++k) {
      labels.push_back("H" + std::to_string(deg) + "_" + std::to_string(k));
      Vector full(space.total(), Rational(0));
      for (std::size_t a = 0; a < n; ++a) full[space.offset(deg) + a] = reps[k][a];
      reps_.push_back(std::move(full));
    }
    boundaries_[j] = std::move(bounds);
  }
  h_ = GradedSpace(space.lo(), hdims, labels);
}

Vector GradedCohomology::project(const Vector& v) const {
  if (v.size() != original_.total()) throw ValidationError("vector size mismatch in projection");
  Vector dv = apply_graded_linear(original_, d_, v);
  for (const auto& x : dv) {
    if (x != 0) throw ValidationError("projection of a non-cocycle");
  }
  Vector out(h_.total(), Rational(0));
  for (int deg = original_.lo(); deg <= original_.hi(); ++deg) {
    const std::size_t n = original_.dim(deg);
    const std::size_t h = h_.dim(deg);
    if (n == 0 || h == 0) continue;
    const std::size_t j = static_cast<std::size_t>(deg - original_.lo());
    std::vector<Vector> cols;
    for (std::size_t k = 0; k < h; ++k) {
      const Vector& r = reps_[h_.offset(deg) + k];
      cols.emplace_back(r.begin() + static_cast<long>(original_.offset(deg)),
                        r.begin() + static_cast<long>(original_.offset(deg) + n));
    }
    cols.insert(cols.end(), boundaries_[j].begin(), boundaries_[j].end());
    Vector rhs(v.begin() + static_cast<long>(original_.offset(deg)), v.begin() + static_cast<long>(original_.offset(deg) + n));
    auto x = solve(Matrix::from_columns(field_, cols, n), rhs);
    if (!x) throw ValidationError("projection of a non-cocycle");
    for (std::size_t k = 0; k < h; ++k) out[h_.offset(deg) + k] = (*x)[k];
  }
  return out;
}

Vector GradedCohomology::lift(const Vector& hv) const {
  Vector out(original_.total(), Rational(0));
  for (std::size_t k = 0; k < hv.size(); ++k) {
    if (hv[k] == 0) continue;
    for (std::size_t a = 0; a < out.size(); ++a) out[a] = field_.add(out[a], field_.mul(hv[k], reps_[k][a]));
  }
  return out;
}

namespace {

StructureConstants induced(const GradedCohomology& left, const GradedCohomology& right,
                           const GradedCohomology& out,
                           const std::function<Vector(const Vector&, const Vector&)>& product) {
  StructureConstants sc;
  for (std::size_t x = 0; x < left.space().total(); ++x) {
    for (std::size_t y = 0; y < right.space().total(); ++y) {
      Vector v = out.project(product(left.representative(x), right.representative(y)));
      SparseVec s = make_sparse(v);
      if (!s.empty()) sc.emplace(std::make_pair(x, y), std::move(s));
    }
  }
  return sc;
}

}  // namespace

CohomologyDgla cohomology_dgla(const Dgla& c) {
  GradedCohomology h(c.field(), c.space(), c.d());
  StructureConstants br = induced(h, h, h, [&](const Vector& a, const Vector& b) { return c.bracket(a, b); });
  Dgla d(c.field(), h.space(), {}, std::move(br));
  return {std::move(d), std::move(h)};
}

CohomologyPair cohomology_pair(const DglaPair& p) {
  CohomologyDgla hc = cohomology_dgla(p.lie());
  GradedCohomology hm(p.field(), p.module(), p.dm());
  StructureConstants act =
      induced(hc.data, hm, hm, [&](const Vector& a, const Vector& m) { return p.act(a, m); });
  DglaPair pair(hc.dgla, hm.space(), {}, std::move(act));
  return {std::move(pair), std::move(hc.data), std::move(hm)};
}

}  // namespace cjl
