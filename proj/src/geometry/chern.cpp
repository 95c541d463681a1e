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

#include "cjl/geometry/chern.hpp"

#include <functional>

#include "cjl/algebra/errors.hpp"
#include "cjl/algebra/linalg.hpp"

namespace cjl {

namespace {

long betti_at(const std::vector<long>& b, int j) {
  if (j < 0 || static_cast<std::size_t>(j) >= b.size()) return 0;
  return b[static_cast<std::size_t>(j)];
}

std::vector<Rational> truncated_product(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  std::vector<Rational> out(a.size(), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j < out.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

std::string partition_string(const std::vector<int>& lambda) {
  std::string s = "(";
  for (std::size_t r = 0; r < lambda.size(); ++r) s += (r ? "," : "") + std::to_string(lambda[r]);
  return s + ")";
}

}  // namespace

long chern_exponent(const std::vector<long>& b, int i, int k) {
  long e = betti_at(b, i + 1 - k);
  return k % 2 ? -e : e;
}

ChernSeries chern_series(const std::vector<long>& b, int i, std::size_t bound) {
  std::vector<Rational> c(bound + 1, Rational(0));
  c[0] = 1;
  for (int k = 1; k <= i + 1; ++k) {
    long e = chern_exponent(b, i, k);
    std::vector<Rational> factor(bound + 1, Rational(0));
    if (e >= 0) {
      factor[0] = 1;
      if (bound >= 1) factor[1] = -k;
    } else {
      // (1 - k t)^{-1} = sum k^n t^n
      Rational p = 1;
      for (std::size_t n = 0; n <= bound; ++n, p *= k) factor[n] = p;
    }
    for (long n = 0; n < (e >= 0 ? e : -e); ++n) c = truncated_product(c, factor);
  }
  return {i, std::move(c)};
}

ChernSeries chern_series_logderiv(const std::vector<long>& b, int i, std::size_t bound) {
  // t c'/c = sum_m p_m t^m with p_m = -sum_k e_k k^m.
  std::vector<Rational> p(bound + 1, Rational(0));
  for (int k = 1; k <= i + 1; ++k) {
    Rational e = chern_exponent(b, i, k);
    Rational km = 1;
    for (std::size_t m = 1; m <= bound; ++m) {
      km *= k;
      p[m] -= e * km;
    }
  }
  std::vector<Rational> c(bound + 1, Rational(0));
  c[0] = 1;
  for (std::size_t n = 1; n <= bound; ++n) {
    Rational s = 0;
    for (std::size_t m = 1; m <= n; ++m) s += p[m] * c[n - m];
    c[n] = s / Rational(static_cast<long>(n));
  }
  return {i, std::move(c)};
}

long euler_chi(const std::vector<long>& b, int a) {
  long chi = 0;
  for (int j = a, sign = 1; j >= 0; --j, sign = -sign) chi += sign * betti_at(b, j);
  return chi;
}

ChernSeries gated_chern_series(const std::vector<long>& b, int i, int a, long q) {
  if (euler_chi(b, a) == 0) {
    throw ValidationError("Chern series refused: the alternating Betti sum up to a = " + std::to_string(a) +
                          " vanishes, so the positivity hypothesis fails");
  }
  return chern_series(b, i, q > 1 ? static_cast<std::size_t>(q - 1) : 0);
}

std::vector<std::vector<int>> partitions(int weight) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int max_part) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int part = 1; part <= std::min(left, max_part); ++part) {
      cur.push_back(part);
      rec(left - part, part);
      cur.pop_back();
    }
  };
  if (weight > 0) rec(weight, weight);
  return out;
}

Rational schur_value(const ChernSeries& cs, const std::vector<int>& lambda) {
  const std::size_t n = lambda.size();
  auto coeff = [&cs](int j) -> Rational {
    if (j < 0) return 0;
    if (static_cast<std::size_t>(j) >= cs.coeffs.size()) throw ValidationError("Chern series too short for Schur weight");
    return cs.coeffs[static_cast<std::size_t>(j)];
  };
  Matrix m(Field::rationals(), n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t s = 0; s < n; ++s) m(r, s) = coeff(lambda[r] - static_cast<int>(r) + static_cast<int>(s));
  }
  // Gaussian elimination determinant.
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m(piv, col) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      for (std::size_t s = 0; s < n; ++s) std::swap(m(piv, s), m(col, s));
      det = -det;
    }
    det *= m(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      Rational f = m(r, col) / m(col, col);
      if (f == 0) continue;
      for (std::size_t s = col; s < n; ++s) m(r, s) -= f * m(col, s);
    }
  }
  return det;
}

std::vector<Verdict> schur_nonnegativity(const ChernSeries& cs, long q) {
  std::vector<Verdict> out;
  for (int w = 1; w < q; ++w) {
    for (const auto& lambda : partitions(w)) {
      Rational v = schur_value(cs, lambda);
      out.push_back({"9.1l:i=" + std::to_string(cs.i) + ":w=" + std::to_string(w) + ":lambda=" + partition_string(lambda),
                     v >= 0, "value " + v.get_str()});
    }
  }
  return out;
}

}  // namespace cjl
