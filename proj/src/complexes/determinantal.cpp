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

#include "cjl/complexes/determinantal.hpp"

#include <cstdint>
#include <unordered_map>

#include "cjl/algebra/errors.hpp"

namespace cjl {

namespace {

using Mask = std::uint64_t;

struct MaskPairHash {
  std::size_t operator()(const std::pair<Mask, Mask>& p) const {
    return std::hash<Mask>()(p.first) * 1000003u ^ std::hash<Mask>()(p.second);
  }
};

// Laplace expansion along the first selected row, sub-minors memoized.
class MinorEngine {
 public:
  explicit MinorEngine(const PolyMatrix& m) : m_(m) {
    if (m.rows() > 64 || m.cols() > 64) throw ResourceLimitError("matrix too large for minor enumeration");
  }

  Polynomial minor(Mask rows, Mask cols) {
    if (rows == 0) return Polynomial::constant(m_.ring(), 1);
    auto key = std::make_pair(rows, cols);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    int r0 = __builtin_ctzll(rows);
    Mask rest = rows & (rows - 1);
    Polynomial sum(m_.ring());
    int sign = 1;
    for (Mask c = cols; c != 0; c &= c - 1) {
      int col = __builtin_ctzll(c);
      const Polynomial& a = m_(static_cast<std::size_t>(r0), static_cast<std::size_t>(col));
      if (!a.is_zero()) {
        Polynomial sub = minor(rest, cols & ~(Mask{1} << col));
        if (!sub.is_zero()) {
          if (sign > 0) {
            sum += a * sub;
          } else {
            sum -= a * sub;
          }
        }
      }
      sign = -sign;
    }
    memo_.emplace(key, sum);
    return sum;
  }

 private:
  const PolyMatrix& m_;
  std::unordered_map<std::pair<Mask, Mask>, Polynomial, MaskPairHash> memo_;
};

void subsets(std::size_t n, std::size_t k, std::size_t start, Mask cur, std::vector<Mask>& out) {
  if (k == 0) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i + k <= n; ++i) subsets(n, k - 1, i + 1, cur | (Mask{1} << i), out);
}

}  // namespace

std::vector<Polynomial> minors(const PolyMatrix& m, int r) {
  if (r <= 0) return {Polynomial::constant(m.ring(), 1)};
  std::size_t k = static_cast<std::size_t>(r);
  if (k > m.rows() || k > m.cols()) return {};
  MinorEngine engine(m);
  std::vector<Mask> rs, cs;
  subsets(m.rows(), k, 0, 0, rs);
  subsets(m.cols(), k, 0, 0, cs);
  std::vector<Polynomial> out;
  out.reserve(rs.size() * cs.size());
  for (Mask rm : rs) {
    for (Mask cm : cs) out.push_back(engine.minor(rm, cm));
  }
  return out;
}

Ideal determinantal_ideal(const PolyMatrix& m, int r) {
  if (r <= 0) return Ideal::unit(m.ring());
  return Ideal(m.ring(), minors(m, r));
}

Ideal block_diag_determinantal(const PolyMatrix& a, const PolyMatrix& b, int r) {
  if (!same_ring(a.ring(), b.ring())) throw RingMismatch("block sum across rings");
  if (r <= 0) return Ideal::unit(a.ring());
  std::vector<Polynomial> gens;
  for (int j = 0; j <= r; ++j) {
    auto ma = minors(a, j);
    if (ma.empty()) continue;
    auto mb = minors(b, r - j);
    for (const auto& x : ma) {
      if (x.is_zero()) continue;
      for (const auto& y : mb) {
        if (!y.is_zero()) gens.push_back(x * y);
      }
    }
  }
  return Ideal(a.ring(), std::move(gens));
}

Ideal block_diag_determinantal_direct(const PolyMatrix& a, const PolyMatrix& b, int r) {
  return determinantal_ideal(block_diag(a, b), r);
}

Polynomial determinant(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw ValidationError("determinant of a non-square matrix");
  if (m.rows() == 0) return Polynomial::constant(m.ring(), 1);
  MinorEngine engine(m);
  Mask all = m.rows() == 64 ? ~Mask{0} : ((Mask{1} << m.rows()) - 1);
  return engine.minor(all, all);
}

}  // namespace cjl
