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

#include "cjl/dgla/pair_map.hpp"

#include <algorithm>

#include "cjl/algebra/errors.hpp"

namespace cjl {

namespace {

Vector unit(std::size_t n, std::size_t i) {
  Vector v(n, Rational(0));
  v[i] = 1;
  return v;
}

Matrix block(const Matrix& m, const GradedSpace& rows, const GradedSpace& cols, int degree) {
  Matrix out(m.field(), rows.dim(degree), cols.dim(degree));
  for (std::size_t r = 0; r < out.rows(); ++r) {
    for (std::size_t c = 0; c < out.cols(); ++c) out(r, c) = m(rows.offset(degree) + r, cols.offset(degree) + c);
  }
  return out;
}

struct Induced {
  bool injective;
  bool surjective;
};

// H^i of a map of complexes of vector spaces, from the blocks around degree i.
Induced induced_map(const Field& f, const Matrix& din_s, const Matrix& dout_s, const Matrix& din_t,
                    const Matrix& dout_t, const Matrix& g, std::size_t ns, std::size_t nt) {
  auto cycles = [&](const Matrix& dout, std::size_t n) {
    std::vector<Vector> z;
    if (dout.rows() == 0) {
      for (std::size_t k = 0; k < n; ++k) z.push_back(unit(n, k));
    } else {
      z = kernel(dout);
    }
    return z;
  };
  auto bounds = [&](const Matrix& din) {
    std::vector<Vector> b;
    if (din.rows() > 0 && din.cols() > 0) {
      for (auto c : independent_columns(din)) b.push_back(din.column(c));
    }
    return b;
  };
  std::vector<Vector> zs = cycles(dout_s, ns), zt = cycles(dout_t, nt);
  std::vector<Vector> bs = bounds(din_s), bt = bounds(din_t);
  std::vector<Vector> cols;
  for (const auto& z : zs) cols.push_back(g * z);
  cols.insert(cols.end(), bt.begin(), bt.end());
  std::size_t span = (cols.empty() || nt == 0) ? 0 : rank(Matrix::from_columns(f, cols, nt));
  std::size_t pre = zs.size() - (span - bt.size());
  return {pre == bs.size(), span == zt.size()};
}

Induced induced_at(const Field& f, const GradedSpace& s, const std::vector<Matrix>& ds, const GradedSpace& t,
                   const std::vector<Matrix>& dt, const Matrix& g, int i) {
  auto dmat = [&](const GradedSpace& sp, const std::vector<Matrix>& d, int deg) {
    if (deg >= sp.lo() && deg < sp.hi()) return d[static_cast<std::size_t>(deg - sp.lo())];
    return Matrix(f, sp.dim(deg + 1), sp.dim(deg));
  };
  return induced_map(f, dmat(s, ds, i - 1), dmat(s, ds, i), dmat(t, dt, i - 1), dmat(t, dt, i), block(g, t, s, i),
                     s.dim(i), t.dim(i));
}

std::string first_failure(const Field& f, const GradedSpace& s, const std::vector<Matrix>& ds, const GradedSpace& t,
                          const std::vector<Matrix>& dt, const Matrix& g, int iso_up_to, const char* name) {
  int lo = std::min(s.lo(), t.lo());
  for (int d = lo; d <= iso_up_to + 1; ++d) {
    Induced h = induced_at(f, s, ds, t, dt, g, d);
    if (!h.injective) return std::string("H^") + std::to_string(d) + "(" + name + ") is not injective";
    if (d <= iso_up_to && !h.surjective) return std::string("H^") + std::to_string(d) + "(" + name + ") is not surjective";
  }
  return "";
}

}  // namespace

void check_pair_map(const PairMap& g) {
  const DglaPair& p = g.source;
  const DglaPair& q = g.target;
  const GradedSpace& cs = p.lie().space();
  const GradedSpace& ct = q.lie().space();
  const GradedSpace& ms = p.module();
  const GradedSpace& mt = q.module();
  if (g.g1.rows() != ct.total() || g.g1.cols() != cs.total()) throw ValidationError("g1 has the wrong shape");
  if (g.g2.rows() != mt.total() || g.g2.cols() != ms.total()) throw ValidationError("g2 has the wrong shape");
  for (std::size_t x = 0; x < cs.total(); ++x) {
    Vector img = g.g1.column(x);
    for (std::size_t y = 0; y < img.size(); ++y) {
      if (img[y] != 0 && ct.degree_of(y) != cs.degree_of(x)) throw ValidationError("g1 does not preserve the degree of " + cs.label(x));
    }
    Vector ex = unit(cs.total(), x);
    if (g.g1 * p.lie().diff(ex) != q.lie().diff(img)) throw ValidationError("g1 does not commute with d at " + cs.label(x));
    for (std::size_t y = 0; y < cs.total(); ++y) {
      Vector ey = unit(cs.total(), y);
      if (g.g1 * p.lie().bracket(ex, ey) != q.lie().bracket(img, g.g1 * ey)) {
        throw ValidationError("g1 does not preserve the bracket of " + cs.label(x) + " and " + cs.label(y));
      }
    }
    for (std::size_t m = 0; m < ms.total(); ++m) {
      Vector em = unit(ms.total(), m);
      if (g.g2 * p.act(ex, em) != q.act(img, g.g2 * em)) {
        throw ValidationError("g does not preserve the action of " + cs.label(x) + " on " + ms.label(m));
      }
    }
  }
  for (std::size_t m = 0; m < ms.total(); ++m) {
    Vector img = g.g2.column(m);
    for (std::size_t y = 0; y < img.size(); ++y) {
      if (img[y] != 0 && mt.degree_of(y) != ms.degree_of(m)) throw ValidationError("g2 does not preserve the degree of " + ms.label(m));
    }
    if (g.g2 * p.module_diff(unit(ms.total(), m)) != q.module_diff(img)) {
      throw ValidationError("g2 does not commute with d at " + ms.label(m));
    }
  }
}

EquivalenceVerdict pair_map_equivalence(const PairMap& g, int i) {
  check_pair_map(g);
  const Field& f = g.source.field();
  std::string w = first_failure(f, g.source.lie().space(), g.source.lie().d(), g.target.lie().space(),
                                g.target.lie().d(), g.g1, 1, "g1");
  if (w.empty()) {
    w = first_failure(f, g.source.module(), g.source.dm(), g.target.module(), g.target.dm(), g.g2, i, "g2");
  }
  return {w.empty(), w};
}

namespace {

struct SumSpace {
  GradedSpace space;
  std::vector<std::size_t> from_first;
  std::vector<std::size_t> from_second;
};

SumSpace sum_space(const GradedSpace& a, const GradedSpace& b) {
  int lo = std::min(a.lo(), b.lo());
  int hi = std::max(a.hi(), b.hi());
  std::vector<std::size_t> dims;
  std::vector<std::string> labels;
  SumSpace out;
  out.from_first.resize(a.total());
  out.from_second.resize(b.total());
  std::size_t g = 0;
  for (int d = lo; d <= hi; ++d) {
    dims.push_back(a.dim(d) + b.dim(d));
    for (std::size_t l = 0; l < a.dim(d); ++l) {
      out.from_first[a.global(d, l)] = g++;
      labels.push_back(a.label(a.global(d, l)));
    }
    for (std::size_t l = 0; l < b.dim(d); ++l) {
      out.from_second[b.global(d, l)] = g++;
      labels.push_back(b.label(b.global(d, l)) + "'");
    }
  }
  out.space = GradedSpace(lo, dims, labels);
  return out;
}

std::vector<Matrix> sum_diffs(const Field& f, const SumSpace& s, const GradedSpace& a, const std::vector<Matrix>& da,
                              const GradedSpace& b, const std::vector<Matrix>& db) {
  Matrix full(f, s.space.total(), s.space.total());
  auto put = [&](const GradedSpace& sp, const std::vector<Matrix>& d, const std::vector<std::size_t>& map) {
    for (std::size_t x = 0; x < sp.total(); ++x) {
      Vector v = apply_graded_linear(sp, d, unit(sp.total(), x));
      for (std::size_t y = 0; y < v.size(); ++y) {
        if (v[y] != 0) full(map[y], map[x]) = v[y];
      }
    }
  };
  put(a, da, s.from_first);
  put(b, db, s.from_second);
  std::vector<Matrix> out;
  for (int d = s.space.lo(); d < s.space.hi(); ++d) {
    Matrix m(f, s.space.dim(d + 1), s.space.dim(d));
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = full(s.space.offset(d + 1) + r, s.space.offset(d) + c);
    }
    out.push_back(std::move(m));
  }
  return out;
}

StructureConstants remap(const StructureConstants& sc, const std::vector<std::size_t>& left,
                         const std::vector<std::size_t>& right, const std::vector<std::size_t>& out) {
  StructureConstants r;
  for (const auto& [xy, val] : sc) {
    SparseVec v;
    for (const auto& [k, c] : val) v.emplace_back(out[k], c);
    std::sort(v.begin(), v.end());
    r.emplace(std::make_pair(left[xy.first], right[xy.second]), std::move(v));
  }
  return r;
}

DglaPair sum_pair(const DglaPair& p, const DglaPair& q, SumSpace& c, SumSpace& m) {
  const Field& f = p.field();
  c = sum_space(p.lie().space(), q.lie().space());
  m = sum_space(p.module(), q.module());
  StructureConstants br = remap(p.lie().bracket_table(), c.from_first, c.from_first, c.from_first);
  for (auto& e : remap(q.lie().bracket_table(), c.from_second, c.from_second, c.from_second)) br.insert(e);
  StructureConstants act = remap(p.action_table(), c.from_first, m.from_first, m.from_first);
  for (auto& e : remap(q.action_table(), c.from_second, m.from_second, m.from_second)) act.insert(e);
  Dgla lie(f, c.space, sum_diffs(f, c, p.lie().space(), p.lie().d(), q.lie().space(), q.lie().d()), std::move(br));
  return DglaPair(std::move(lie), m.space, sum_diffs(f, m, p.module(), p.dm(), q.module(), q.dm()), std::move(act));
}

}  // namespace

PairMap include_into_sum(const DglaPair& p, const DglaPair& q) {
  SumSpace c, m;
  DglaPair s = sum_pair(p, q, c, m);
  Matrix g1(p.field(), c.space.total(), p.lie().space().total());
  for (std::size_t x = 0; x < c.from_first.size(); ++x) g1(c.from_first[x], x) = 1;
  Matrix g2(p.field(), m.space.total(), p.module().total());
  for (std::size_t x = 0; x < m.from_first.size(); ++x) g2(m.from_first[x], x) = 1;
  return {p, std::move(s), std::move(g1), std::move(g2)};
}

PairMap project_from_sum(const DglaPair& p, const DglaPair& q) {
  PairMap inc = include_into_sum(p, q);
  return {inc.target, p, inc.g1.transpose(), inc.g2.transpose()};
}

DglaPair acyclic_pair(const Field& field, int degree) {
  GradedSpace c(degree, {1, 1}, {"k", "dk"});
  GradedSpace m(degree, {1, 1}, {"n", "dn"});
  Matrix id = Matrix::identity(field, 1);
  Dgla lie(field, c, {id}, {});
  return DglaPair(std::move(lie), m, {id}, {});
}

}  // namespace cjl
