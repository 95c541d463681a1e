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

#include "cjl/models/cdga.hpp"

#include <algorithm>

#include "cjl/algebra/errors.hpp"

namespace cjl {

namespace {

Vector unit(std::size_t n, std::size_t i) {
  Vector v(n, Rational(0));
  v[i] = 1;
  return v;
}

bool odd(int a) { return a % 2 != 0; }

std::string subset_label(const std::vector<std::size_t>& s) {
  if (s.empty()) return "1";
  std::string out;
  for (auto i : s) out += "e" + std::to_string(i + 1);
  return out;
}

}  // namespace

Vector Cdga::multiply(const Vector& a, const Vector& b) const { return apply_bilinear(field, mult, a, b, space.total()); }

std::vector<std::size_t> Cdga::betti() const {
  std::vector<std::size_t> out;
  for (int deg = space.lo(); deg <= space.hi(); ++deg) {
    std::size_t n = space.dim(deg);
    std::size_t r_out = 0, r_in = 0;
    if (!d.empty() && deg < space.hi()) r_out = rank(d[static_cast<std::size_t>(deg - space.lo())]);
    if (!d.empty() && deg > space.lo()) r_in = rank(d[static_cast<std::size_t>(deg - space.lo() - 1)]);
    out.push_back(n - r_out - r_in);
  }
  return out;
}

AxiomReport check_cdga(const Cdga& a) {
  AxiomReport rep;
  const Field& f = a.field;
  const GradedSpace& s = a.space;
  const std::size_t n = s.total();
  if (n == 0 || s.degree_of(0) != 0) {
    rep.violations.push_back({"unit", {}, "basis vector 0 must have degree 0"});
    return rep;
  }
  std::vector<Vector> e;
  for (std::size_t x = 0; x < n; ++x) e.push_back(unit(n, x));
  std::vector<std::vector<Vector>> prod(n, std::vector<Vector>(n));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) prod[x][y] = a.multiply(e[x], e[y]);
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (prod[0][x] != e[x] || prod[x][0] != e[x]) rep.violations.push_back({"unit", {s.label(x)}, ""});
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      Vector other = prod[y][x];
      if (odd(s.degree_of(x)) && odd(s.degree_of(y))) {
        for (auto& c : other) c = f.neg(c);
      }
      if (prod[x][y] != other) rep.violations.push_back({"graded commutativity", {s.label(x), s.label(y)}, ""});
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        if (a.multiply(prod[x][y], e[z]) != a.multiply(e[x], prod[y][z])) {
          rep.violations.push_back({"associativity", {s.label(x), s.label(y), s.label(z)}, ""});
        }
      }
    }
  }
  if (!a.d.empty()) {
    for (std::size_t x = 0; x < n; ++x) {
      Vector dx = apply_graded_linear(s, a.d, e[x]);
      if (apply_graded_linear(s, a.d, dx) != Vector(n, Rational(0))) rep.violations.push_back({"d^2=0", {s.label(x)}, ""});
      for (std::size_t y = 0; y < n; ++y) {
        Vector lhs = apply_graded_linear(s, a.d, prod[x][y]);
        Vector t1 = a.multiply(dx, e[y]);
        Vector t2 = a.multiply(e[x], apply_graded_linear(s, a.d, e[y]));
        Vector rhs(n);
        for (std::size_t k = 0; k < n; ++k) rhs[k] = odd(s.degree_of(x)) ? f.sub(t1[k], t2[k]) : f.add(t1[k], t2[k]);
        if (lhs != rhs) rep.violations.push_back({"Leibniz", {s.label(x), s.label(y)}, ""});
      }
    }
  }
  return rep;
}

Cdga exterior_algebra(std::size_t n, Field field) {
  std::vector<std::vector<std::size_t>> subsets;
  std::vector<std::size_t> dims(n + 1, 0);
  for (std::size_t k = 0; k <= n; ++k) {
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + static_cast<long>(k), true);
    do {
      std::vector<std::size_t> s;
      for (std::size_t i = 0; i < n; ++i) {
        if (pick[i]) s.push_back(i);
      }
      subsets.push_back(s);
      ++dims[k];
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  std::vector<std::string> labels;
  for (const auto& s : subsets) labels.push_back(subset_label(s));
  Cdga a;
  a.field = field;
  a.space = GradedSpace(0, dims, labels);
  for (std::size_t x = 0; x < subsets.size(); ++x) {
    for (std::size_t y = 0; y < subsets.size(); ++y) {
      const auto& s = subsets[x];
      const auto& t = subsets[y];
      std::vector<std::size_t> u;
      std::set_union(s.begin(), s.end(), t.begin(), t.end(), std::back_inserter(u));
      if (u.size() != s.size() + t.size()) continue;
      int inversions = 0;
      for (auto i : s) {
        for (auto j : t) {
          if (i > j) ++inversions;
        }
      }
      std::size_t z = static_cast<std::size_t>(std::find(subsets.begin(), subsets.end(), u) - subsets.begin());
      a.mult[{x, y}] = {{z, Rational(inversions % 2 ? -1 : 1)}};
    }
  }
  return a;
}

Cdga surface_algebra(std::size_t g, Field field) {
  if (g == 0) throw ValidationError("surface genus must be positive");
  std::vector<std::string> labels{"1"};
  for (std::size_t i = 1; i <= g; ++i) labels.push_back("a" + std::to_string(i));
  for (std::size_t i = 1; i <= g; ++i) labels.push_back("b" + std::to_string(i));
  labels.push_back("f");
  Cdga a;
  a.field = field;
  a.space = GradedSpace(0, {1, 2 * g, 1}, labels);
  const std::size_t top = 2 * g + 1;
  for (std::size_t x = 0; x <= top; ++x) {
    a.mult[{0, x}] = {{x, Rational(1)}};
    if (x != 0) a.mult[{x, 0}] = {{x, Rational(1)}};
  }
  for (std::size_t i = 1; i <= g; ++i) {
    a.mult[{i, g + i}] = {{top, Rational(1)}};
    a.mult[{g + i, i}] = {{top, Rational(-1)}};
  }
  return a;
}

LieAlgebra gl_algebra(std::size_t r, Field field) {
  LieAlgebra g;
  g.dim = r * r;
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) g.labels.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
  }
  auto idx = [r](std::size_t i, std::size_t j) { return i * r + j; };
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      for (std::size_t k = 0; k < r; ++k) {
        for (std::size_t l = 0; l < r; ++l) {
          // [E_ij, E_kl] = delta_jk E_il - delta_li E_kj
          Vector v(g.dim, Rational(0));
          if (j == k) v[idx(i, l)] += 1;
          if (l == i) v[idx(k, j)] -= 1;
          for (auto& c : v) c = field.normalize(c);
          SparseVec s = make_sparse(v);
          if (!s.empty()) g.bracket[{idx(i, j), idx(k, l)}] = std::move(s);
        }
      }
    }
  }
  return g;
}

Representation matrix_module(std::size_t r, std::size_t s, Field field) {
  Representation v;
  v.dim = r * s;
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < s; ++j) v.labels.push_back("F" + std::to_string(i + 1) + std::to_string(j + 1));
  }
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      Matrix m(field, v.dim, v.dim);
      // E_ij F_jl = F_il
      for (std::size_t l = 0; l < s; ++l) m(i * s + l, j * s + l) = 1;
      v.rho.push_back(std::move(m));
    }
  }
  return v;
}

DglaPair tensor_pair(const Cdga& a, const LieAlgebra& g, const Representation& v) {
  const Field& f = a.field;
  const GradedSpace& as = a.space;
  if (v.rho.size() != g.dim) throw ValidationError("representation needs one matrix per Lie algebra basis vector");
  std::vector<std::size_t> cdims, mdims;
  std::vector<std::string> clabels, mlabels;
  for (int deg = as.lo(); deg <= as.hi(); ++deg) {
    cdims.push_back(as.dim(deg) * g.dim);
    mdims.push_back(as.dim(deg) * v.dim);
    for (std::size_t l = 0; l < as.dim(deg); ++l) {
      for (std::size_t x = 0; x < g.dim; ++x) clabels.push_back(as.label(as.global(deg, l)) + "*" + g.labels[x]);
      for (std::size_t x = 0; x < v.dim; ++x) mlabels.push_back(as.label(as.global(deg, l)) + "*" + v.labels[x]);
    }
  }
  GradedSpace cs(as.lo(), cdims, clabels);
  GradedSpace ms(as.lo(), mdims, mlabels);
  // Global index of a_global tensor x: A basis in degree blocks, g inside.
  auto cidx = [&](std::size_t ag, std::size_t x) { return ag * g.dim + x; };
  auto midx = [&](std::size_t ag, std::size_t x) { return ag * v.dim + x; };

  StructureConstants br, act;
  for (const auto& [ab, prod] : a.mult) {
    for (const auto& [xy, lie] : g.bracket) {
      std::map<std::size_t, Rational> out;
      for (const auto& [c, pc] : prod) {
        for (const auto& [z, lz] : lie) out[cidx(c, z)] += pc * lz;
      }
      SparseVec sv;
      for (const auto& [k, val] : out) {
        Rational n = f.normalize(val);
        if (n != 0) sv.emplace_back(k, n);
      }
      if (!sv.empty()) br[{cidx(ab.first, xy.first), cidx(ab.second, xy.second)}] = std::move(sv);
    }
    for (std::size_t x = 0; x < g.dim; ++x) {
      const Matrix& rho = v.rho[x];
      for (std::size_t w = 0; w < v.dim; ++w) {
        std::map<std::size_t, Rational> out;
        for (const auto& [c, pc] : prod) {
          for (std::size_t u = 0; u < v.dim; ++u) {
            if (rho(u, w) != 0) out[midx(c, u)] += pc * rho(u, w);
          }
        }
        SparseVec sv;
        for (const auto& [k, val] : out) {
          Rational n = f.normalize(val);
          if (n != 0) sv.emplace_back(k, n);
        }
        if (!sv.empty()) act[{cidx(ab.first, x), midx(ab.second, w)}] = std::move(sv);
      }
    }
  }
  std::vector<Matrix> cd, md;
  for (int deg = as.lo(); deg < as.hi(); ++deg) {
    Matrix c(f, cs.dim(deg + 1), cs.dim(deg));
    Matrix m(f, ms.dim(deg + 1), ms.dim(deg));
    if (!a.d.empty()) {
      const Matrix& da = a.d[static_cast<std::size_t>(deg - as.lo())];
      for (std::size_t r = 0; r < da.rows(); ++r) {
        for (std::size_t l = 0; l < da.cols(); ++l) {
          if (da(r, l) == 0) continue;
          for (std::size_t x = 0; x < g.dim; ++x) c(r * g.dim + x, l * g.dim + x) = da(r, l);
          for (std::size_t x = 0; x < v.dim; ++x) m(r * v.dim + x, l * v.dim + x) = da(r, l);
        }
      }
    }
    cd.push_back(std::move(c));
    md.push_back(std::move(m));
  }
  Dgla lie(f, cs, std::move(cd), std::move(br));
  return DglaPair(std::move(lie), ms, std::move(md), std::move(act));
}

DglaPair cdga_to_pair(const Cdga& a, std::size_t r, std::size_t s) {
  if (r == 0 || s == 0) throw ValidationError("matrix sizes must be positive");
  return tensor_pair(a, gl_algebra(r, a.field), matrix_module(r, s, a.field));
}

}  // namespace cjl
