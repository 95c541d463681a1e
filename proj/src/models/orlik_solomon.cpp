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

#include "cjl/models/orlik_solomon.hpp"

#include <algorithm>
#include <map>

#include "cjl/algebra/errors.hpp"

namespace cjl {

namespace {

using Subset = std::vector<std::size_t>;

std::vector<Subset> subsets_of_size(std::size_t n, std::size_t k) {
  std::vector<Subset> out;
  if (k > n) return out;
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + static_cast<long>(k), true);
  do {
    Subset s;
    for (std::size_t i = 0; i < n; ++i) {
      if (pick[i]) s.push_back(i);
    }
    out.push_back(std::move(s));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

std::size_t rows_rank(const Matrix& normals, const Subset& s) {
  std::vector<Vector> rows;
  for (auto i : s) rows.push_back(normals.row(i));
  return rank(Matrix::from_rows(normals.field(), rows, normals.cols()));
}

// Product e_S e_T in the exterior algebra: (sign, union) or nothing.
std::optional<std::pair<int, Subset>> wedge(const Subset& s, const Subset& t) {
  Subset u;
  std::set_union(s.begin(), s.end(), t.begin(), t.end(), std::back_inserter(u));
  if (u.size() != s.size() + t.size()) return std::nullopt;
  int inv = 0;
  for (auto i : s) {
    for (auto j : t) {
      if (i > j) ++inv;
    }
  }
  return std::make_pair(inv % 2 ? -1 : 1, u);
}

std::string label_of(const Subset& s) {
  if (s.empty()) return "1";
  std::string out;
  for (auto i : s) out += "e" + std::to_string(i + 1);
  return out;
}

struct Piece {
  std::vector<Subset> monomials;           // all of Lambda^p, lex
  std::map<Subset, std::size_t> position;  // monomial -> column
  RowEchelon relations{Matrix(Field::rationals(), 0, 0), {}};
  std::vector<std::size_t> basis;  // non-pivot columns
};

Vector normal_form(const Field& f, const Piece& piece, Vector v) {
  for (std::size_t r = 0; r < piece.relations.pivots.size(); ++r) {
    const Rational c = v[piece.relations.pivots[r]];
    if (c == 0) continue;
    for (std::size_t k = 0; k < v.size(); ++k) {
      const Rational& a = piece.relations.reduced(r, k);
      if (a != 0) v[k] = f.sub(v[k], f.mul(c, a));
    }
  }
  return v;
}

}  // namespace

void validate_arrangement(const Arrangement& arr, std::size_t bound) {
  const Matrix& n = arr.normals;
  if (n.rows() == 0) throw ValidationError("arrangement has no hyperplanes");
  if (n.rows() > bound) {
    throw ValidationError("arrangement has " + std::to_string(n.rows()) + " hyperplanes, bound is " + std::to_string(bound));
  }
  for (std::size_t i = 0; i < n.rows(); ++i) {
    if (rows_rank(n, {i}) == 0) throw ValidationError("hyperplane " + std::to_string(i + 1) + " has zero normal");
    for (std::size_t j = i + 1; j < n.rows(); ++j) {
      if (rows_rank(n, {i, j}) < 2) {
        throw ValidationError("hyperplanes " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " coincide");
      }
    }
  }
}

std::vector<std::vector<std::size_t>> circuits(const Arrangement& arr) {
  const Matrix& n = arr.normals;
  std::vector<Subset> out;
  for (std::size_t k = 1; k <= n.rows(); ++k) {
    for (const auto& s : subsets_of_size(n.rows(), k)) {
      if (rows_rank(n, s) == k) continue;
      bool minimal = true;
      for (const auto& c : out) {
        if (std::includes(s.begin(), s.end(), c.begin(), c.end())) {
          minimal = false;
          break;
        }
      }
      if (minimal) out.push_back(s);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> nbc_betti(const Arrangement& arr) {
  const Matrix& n = arr.normals;
  auto circ = circuits(arr);
  std::vector<Subset> broken;
  for (const auto& c : circ) broken.emplace_back(c.begin() + 1, c.end());
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k <= n.rows(); ++k) {
    std::size_t count = 0;
    for (const auto& s : subsets_of_size(n.rows(), k)) {
      if (rows_rank(n, s) != k) continue;
      bool ok = true;
      for (const auto& b : broken) {
        if (std::includes(s.begin(), s.end(), b.begin(), b.end())) {
          ok = false;
          break;
        }
      }
      if (ok) ++count;
    }
    if (count == 0) break;
    out.push_back(count);
  }
  return out;
}

Cdga orlik_solomon(const Arrangement& arr, std::size_t bound) {
  validate_arrangement(arr, bound);
  const Field f = Field::rationals();
  const std::size_t m = arr.normals.rows();
  auto circ = circuits(arr);

  // Boundaries of circuits as sparse combinations of exterior monomials.
  std::vector<std::vector<std::pair<Subset, int>>> boundaries;
  for (const auto& c : circ) {
    std::vector<std::pair<Subset, int>> b;
    for (std::size_t j = 0; j < c.size(); ++j) {
      Subset s = c;
      s.erase(s.begin() + static_cast<long>(j));
      b.emplace_back(std::move(s), j % 2 ? -1 : 1);
    }
    boundaries.push_back(std::move(b));
  }

  std::vector<Piece> pieces;
  for (std::size_t p = 0; p <= m; ++p) {
    Piece piece;
    piece.monomials = subsets_of_size(m, p);
    for (std::size_t k = 0; k < piece.monomials.size(); ++k) piece.position[piece.monomials[k]] = k;
    std::vector<Vector> rows;
    for (std::size_t ci = 0; ci < circ.size(); ++ci) {
      const std::size_t bdeg = circ[ci].size() - 1;
      if (bdeg > p) continue;
      for (const auto& t : subsets_of_size(m, p - bdeg)) {
        Vector row(piece.monomials.size(), Rational(0));
        for (const auto& [s, sign] : boundaries[ci]) {
          auto w = wedge(t, s);
          if (!w) continue;
          row[piece.position.at(w->second)] += Rational(sign * w->first);
        }
        if (std::any_of(row.begin(), row.end(), [](const Rational& x) { return x != 0; })) rows.push_back(std::move(row));
      }
    }
    piece.relations = rref(Matrix::from_rows(f, rows, piece.monomials.size()));
    std::vector<bool> pivot(piece.monomials.size(), false);
    for (auto c : piece.relations.pivots) pivot[c] = true;
    for (std::size_t k = 0; k < pivot.size(); ++k) {
      if (!pivot[k]) piece.basis.push_back(k);
    }
    if (piece.basis.empty()) break;
    pieces.push_back(std::move(piece));
  }

  std::vector<std::size_t> dims;
  std::vector<std::string> labels;
  std::vector<std::size_t> offset;
  for (const auto& piece : pieces) {
    offset.push_back(labels.size());
    dims.push_back(piece.basis.size());
    for (auto k : piece.basis) labels.push_back(label_of(piece.monomials[k]));
  }
  Cdga a;
  a.field = f;
  a.space = GradedSpace(0, dims, labels);
  for (std::size_t p = 0; p < pieces.size(); ++p) {
    for (std::size_t q = 0; p + q < pieces.size() && q < pieces.size(); ++q) {
      const Piece& target = pieces[p + q];
      for (std::size_t x = 0; x < pieces[p].basis.size(); ++x) {
        const Subset& s = pieces[p].monomials[pieces[p].basis[x]];
        for (std::size_t y = 0; y < pieces[q].basis.size(); ++y) {
          const Subset& t = pieces[q].monomials[pieces[q].basis[y]];
          auto w = wedge(s, t);
          if (!w) continue;
          Vector v(target.monomials.size(), Rational(0));
          v[target.position.at(w->second)] = w->first;
          v = normal_form(f, target, std::move(v));
          SparseVec out;
          for (std::size_t z = 0; z < target.basis.size(); ++z) {
            if (v[target.basis[z]] != 0) out.emplace_back(offset[p + q] + z, v[target.basis[z]]);
          }
          if (!out.empty()) a.mult[{offset[p] + x, offset[q] + y}] = std::move(out);
        }
      }
    }
  }
  return a;
}

}  // namespace cjl
