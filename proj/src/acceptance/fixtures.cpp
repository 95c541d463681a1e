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

#include "cjl/acceptance/fixtures.hpp"

#include "cjl/algebra/parse.hpp"

namespace cjl {

namespace {

int small_int(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

// Inverse of a unipotent upper triangular matrix: sum of (-N)^k.
PolyMatrix unipotent_inverse(const PolyMatrix& g) {
  const std::size_t n = g.rows();
  PolyMatrix nil = g - PolyMatrix::identity(g.ring(), n);
  PolyMatrix term = PolyMatrix::identity(g.ring(), n);
  PolyMatrix sum = term;
  for (std::size_t k = 1; k < n; ++k) {
    term = term * nil;
    if (k % 2) {
      sum = sum - term;
    } else {
      sum = sum + term;
    }
  }
  return sum;
}

PolyMatrix random_unipotent(const ArtinLocalAlgebra& a, std::size_t n, std::mt19937_64& rng) {
  PolyMatrix g = PolyMatrix::identity(a.ring(), n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = r + 1; c < n; ++c) g(r, c) = random_algebra_element(a, rng, false);
  }
  return g;
}

}  // namespace

ArtinLocalAlgebra truncated_line(int n) {
  Ring base = RingContext::make(Field::rationals(), std::vector<std::string>{"t"});
  return make_artin(base, {parse_polynomial(base, "t^" + std::to_string(n))});
}

ArtinLocalAlgebra fat_point() {
  Ring base = RingContext::make(Field::rationals(), std::vector<std::string>{"x", "y"});
  return make_artin(base, parse_polynomials(base, {"x^2", "x*y", "y^2"}));
}

Polynomial random_algebra_element(const ArtinLocalAlgebra& a, std::mt19937_64& rng, bool in_max_ideal) {
  Vector coords(a.dim(), Rational(0));
  for (std::size_t k = in_max_ideal ? 1 : 0; k < a.dim(); ++k) coords[k] = small_int(rng, -2, 2);
  return a.element(coords);
}

FreeComplex random_complex(const ArtinLocalAlgebra& a, std::mt19937_64& rng) {
  const Ring& ring = a.ring();
  const int len = small_int(rng, 1, 4);
  std::vector<std::size_t> ranks(static_cast<std::size_t>(len + 1), 0);
  // Each piece: (degree, map) where the map is absent for a one-term piece.
  struct Piece {
    int degree;
    bool two_term;
    Polynomial map;
  };
  std::vector<Piece> pieces;
  const int count = small_int(rng, 2, 7);
  for (int n = 0; n < count; ++n) {
    int kind = small_int(rng, 0, 2);
    if (kind == 0) {
      int d = small_int(rng, 0, len);
      if (ranks[static_cast<std::size_t>(d)] >= 4) continue;
      ++ranks[static_cast<std::size_t>(d)];
      pieces.push_back({d, false, a.zero()});
    } else {
      int d = small_int(rng, 0, len - 1);
      if (ranks[static_cast<std::size_t>(d)] >= 4 || ranks[static_cast<std::size_t>(d + 1)] >= 4) continue;
      ++ranks[static_cast<std::size_t>(d)];
      ++ranks[static_cast<std::size_t>(d + 1)];
      Polynomial f = kind == 1 ? random_algebra_element(a, rng, true) : a.one() * Rational(small_int(rng, 1, 3));
      pieces.push_back({d, true, f});
    }
  }
  std::vector<PolyMatrix> diffs;
  for (int d = 0; d < len; ++d) diffs.emplace_back(ring, ranks[static_cast<std::size_t>(d + 1)], ranks[static_cast<std::size_t>(d)]);
  std::vector<std::size_t> next(ranks.size(), 0);
  for (const auto& p : pieces) {
    const auto d = static_cast<std::size_t>(p.degree);
    std::size_t src = next[d]++;
    if (!p.two_term) continue;
    std::size_t dst = next[d + 1]++;
    diffs[d](dst, src) = p.map;
  }
  return conjugate_randomly(a, FreeComplex(ring, 0, ranks, diffs), rng);
}

FreeComplex conjugate_randomly(const ArtinLocalAlgebra& a, const FreeComplex& e, std::mt19937_64& rng) {
  std::vector<PolyMatrix> g, ginv;
  for (int i = e.lo(); i <= e.hi(); ++i) {
    g.push_back(random_unipotent(a, e.rank(i), rng));
    ginv.push_back(unipotent_inverse(g.back()));
  }
  std::vector<PolyMatrix> diffs;
  for (int i = e.lo(); i < e.hi(); ++i) {
    const auto j = static_cast<std::size_t>(i - e.lo());
    diffs.push_back(g[j + 1] * e.diff(i) * ginv[j]);
  }
  return FreeComplex(e.ring(), e.lo(), e.ranks(), diffs);
}

FreeComplex pad_randomly(const ArtinLocalAlgebra& a, const FreeComplex& e, std::mt19937_64& rng) {
  FreeComplex out = e;
  const int pads = small_int(rng, 1, 2);
  for (int n = 0; n < pads; ++n) {
    int d = small_int(rng, e.lo() - 1, e.hi());
    Polynomial unit = a.one() * Rational(small_int(rng, 1, 3)) + random_algebra_element(a, rng, true);
    out = out + trivial_complex(e.ring(), d, unit);
  }
  return conjugate_randomly(a, out, rng);
}

std::vector<CorpusEntry> complex_corpus(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  ArtinLocalAlgebra line = truncated_line(3);
  ArtinLocalAlgebra point = fat_point();
  std::vector<CorpusEntry> out;
  for (std::size_t n = 0; n < count; ++n) {
    const ArtinLocalAlgebra& a = n % 2 ? point : line;
    out.push_back({a, random_complex(a, rng)});
  }
  return out;
}

}  // namespace cjl
