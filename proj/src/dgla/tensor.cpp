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

#include "cjl/dgla/tensor.hpp"

#include "cjl/algebra/errors.hpp"

namespace cjl {

namespace {

void check_support(const GradedSpace& s, const ArtinLocalAlgebra& a, const Elem& x, int degree, const char* what) {
  if (x.size() != s.total()) throw ValidationError(std::string(what) + " has " + std::to_string(x.size()) + " coefficients, expected " + std::to_string(s.total()));
  for (std::size_t g = 0; g < x.size(); ++g) {
    if (!same_ring(x[g].ring(), a.ring())) throw RingMismatch(std::string(what) + " coefficient outside the algebra");
    if (x[g].is_zero()) continue;
    if (s.degree_of(g) != degree) throw ValidationError(std::string(what) + " has a component in degree " + std::to_string(s.degree_of(g)));
    if (!a.in_max_ideal(x[g])) throw ValidationError(std::string(what) + " coefficient " + x[g].to_string() + " is not in the maximal ideal");
  }
}

// sum_{n >= 0} coef(n) * ad(lambda)^n x, stopping once a term vanishes.
template <typename Coef>
Elem ad_series(const Dgla& c, const ArtinLocalAlgebra& a, const Elem& lambda, const Elem& x, Coef coef) {
  Elem sum = elem_scale(x, coef(0));
  Elem term = x;
  for (int n = 1; n <= a.nilpotency_index() + 1; ++n) {
    term = c.bracket(lambda, term);
    if (elem_is_zero(term)) break;
    sum = elem_add(sum, elem_scale(term, coef(n)));
  }
  return sum;
}

Rational factorial(int n) {
  Integer f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return Rational(f);
}

}  // namespace

Elem maurer_cartan_expression(const Dgla& c, const Elem& omega) {
  Elem br = c.bracket(omega, omega);
  return elem_add(c.diff(omega), elem_scale(br, Rational(1, 2)));
}

void check_mc_shape(const Dgla& c, const ArtinLocalAlgebra& a, const Elem& omega) {
  check_support(c.space(), a, omega, 1, "MC element");
}

void check_gauge_shape(const Dgla& c, const ArtinLocalAlgebra& a, const Elem& lambda) {
  check_support(c.space(), a, lambda, 0, "gauge element");
}

bool maurer_cartan_check(const Dgla& c, const ArtinLocalAlgebra& a, const Elem& omega) {
  check_mc_shape(c, a, omega);
  return elem_is_zero(maurer_cartan_expression(c, omega));
}

Elem exp_ad(const Dgla& c, const ArtinLocalAlgebra& a, const Elem& lambda, const Elem& x) {
  return ad_series(c, a, lambda, x, [](int n) -> Rational { return 1 / factorial(n); });
}

Elem one_minus_exp_over_ad(const Dgla& c, const ArtinLocalAlgebra& a, const Elem& lambda, const Elem& x) {
  return ad_series(c, a, lambda, x, [](int n) -> Rational { return Rational(-1) / factorial(n + 1); });
}

Elem gauge_act(const Dgla& c, const ArtinLocalAlgebra& a, const Elem& lambda, const Elem& omega) {
  check_gauge_shape(c, a, lambda);
  if (omega.size() != c.space().total()) throw ValidationError("omega has the wrong number of coefficients");
  return elem_add(exp_ad(c, a, lambda, omega), one_minus_exp_over_ad(c, a, lambda, c.diff(lambda)));
}

Elem module_transport(const DglaPair& p, const ArtinLocalAlgebra& a, const Elem& lambda, const Elem& xi) {
  check_gauge_shape(p.lie(), a, lambda);
  if (xi.size() != p.module().total()) throw ValidationError("xi has the wrong number of coefficients");
  Elem sum = xi;
  Elem term = xi;
  for (int n = 1; n <= a.nilpotency_index() + 1; ++n) {
    term = p.act(lambda, term);
    if (elem_is_zero(term)) break;
    sum = elem_add(sum, elem_scale(term, 1 / factorial(n)));
  }
  return sum;
}

IdentitySides transport_product_identity(const DglaPair& p, const ArtinLocalAlgebra& a, const Elem& lambda,
                                         const Elem& omega, const Elem& xi) {
  Elem lhs = module_transport(p, a, lambda, p.act(omega, xi));
  Elem rhs = p.act(exp_ad(p.lie(), a, lambda, omega), module_transport(p, a, lambda, xi));
  return {std::move(lhs), std::move(rhs)};
}

IdentitySides transport_differential_identity(const DglaPair& p, const ArtinLocalAlgebra& a, const Elem& lambda,
                                              const Elem& xi) {
  Elem lhs = module_transport(p, a, lambda, p.module_diff(xi));
  Elem moved = module_transport(p, a, lambda, xi);
  Elem corr = one_minus_exp_over_ad(p.lie(), a, lambda, p.lie().diff(lambda));
  Elem rhs = elem_add(p.module_diff(moved), p.act(corr, moved));
  return {std::move(lhs), std::move(rhs)};
}

Polynomial random_power_element(const ArtinLocalAlgebra& a, int k, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coef(-3, 3);
  auto random_m = [&]() {
    Vector v(a.dim(), Rational(0));
    for (std::size_t i = 1; i < a.dim(); ++i) v[i] = coef(rng);
    return a.element(v);
  };
  Polynomial out = k <= 0 ? a.one() : random_m();
  for (int j = 1; j < k; ++j) out = out * random_m();
  return out;
}

Elem random_elem(const GradedSpace& space, int degree, const ArtinLocalAlgebra& a, std::mt19937_64& rng,
                 int min_power) {
  Elem x = zero_elem(a.ring(), space.total());
  for (std::size_t l = 0; l < space.dim(degree); ++l) {
    x[space.global(degree, l)] = random_power_element(a, min_power, rng);
  }
  return x;
}

Elem sample_mc(const Dgla& c, const ArtinLocalAlgebra& a, std::mt19937_64& rng) {
  const GradedSpace& s = c.space();
  Elem omega = zero_elem(a.ring(), s.total());
  if (s.dim(1) > 0) {
    std::vector<Vector> cycles = kernel(c.diff_matrix(1));
    if (s.dim(2) == 0) {
      cycles.clear();
      for (std::size_t l = 0; l < s.dim(1); ++l) {
        Vector v(s.dim(1), Rational(0));
        v[l] = 1;
        cycles.push_back(v);
      }
    }
    std::uniform_int_distribution<int> coef(-2, 2);
    for (int depth = 1; depth <= a.nilpotency_index(); ++depth) {
      Elem candidate = zero_elem(a.ring(), s.total());
      for (const auto& z : cycles) {
        Polynomial u = random_power_element(a, depth, rng) * Rational(coef(rng));
        for (std::size_t l = 0; l < z.size(); ++l) {
          if (z[l] != 0) candidate[s.global(1, l)] += u * z[l];
        }
      }
      if (elem_is_zero(maurer_cartan_expression(c, candidate))) {
        omega = std::move(candidate);
        break;
      }
    }
  }
  Elem lambda = random_elem(s, 0, a, rng);
  return gauge_act(c, a, lambda, omega);
}

std::vector<Elem> square_zero_mc_basis(const Dgla& c, const ArtinLocalAlgebra& a) {
  if (a.power_dim(2) != 0) throw ValidationError("square-zero solver needs m^2 = 0");
  const GradedSpace& s = c.space();
  std::vector<Vector> cycles;
  if (s.dim(2) == 0) {
    for (std::size_t l = 0; l < s.dim(1); ++l) {
      Vector v(s.dim(1), Rational(0));
      v[l] = 1;
      cycles.push_back(v);
    }
  } else {
    cycles = kernel(c.diff_matrix(1));
  }
  std::vector<Elem> out;
  for (const auto& z : cycles) {
    for (std::size_t b = 1; b < a.dim(); ++b) {
      Elem e = zero_elem(a.ring(), s.total());
      for (std::size_t l = 0; l < z.size(); ++l) {
        if (z[l] != 0) e[s.global(1, l)] = a.basis_element(b) * z[l];
      }
      out.push_back(std::move(e));
    }
  }
  return out;
}

}  // namespace cjl
