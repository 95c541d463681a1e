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

#pragma once

#include <map>
#include <string>
#include <vector>

#include "cjl/dgla/resonance.hpp"
#include "cjl/geometry/chern.hpp"
#include "cjl/geometry/verdict.hpp"

namespace cjl {

/// Largest r with I_r(phi) not contained in `iq` (rank over S / iq).
std::size_t generic_rank(const PolyMatrix& phi, const Ideal& iq);
/// Rank over the fraction field by fraction-free elimination; phi must
/// live in a polynomial ring without quotient.
std::size_t bareiss_rank(const PolyMatrix& phi);

struct GenericRanks {
  int lo = 0;
  std::vector<std::size_t> b;     ///< b[j] = dim H^{lo+j}(M)
  std::vector<std::size_t> beta;  ///< beta[j] = generic rank of phi_{lo+j}
  std::size_t b_at(int i) const;
  std::size_t beta_at(int i) const;
};
/// Throws Error when the symbolic elimination disagrees with the minors
/// (only cross-checked when I_Q = 0).
GenericRanks generic_ranks(const UniversalAomoto& u);

/// Cohen-Macaulayness of S / I_Q is certified for I_Q = 0 and principal I_Q.
bool cm_certified(const QuadraticCone& cone);

/// krull(S / I_Q) - krull(S / (I + I_Q)); the unit ideal gives a value
/// larger than any dimension.
int codimension(const QuadraticCone& cone, const Ideal& ideal);

/// Codimension in PQ of the projective locus of a homogeneous ideal of S.
/// An empty locus reports dim PQ + 1.
struct ProjectiveCodim {
  int codim = 0;
  bool empty = false;
};
ProjectiveCodim projective_codim(const QuadraticCone& cone, const Ideal& ideal);

/// V(a) in V(b) inside affine space: b in rad(a), generator by generator.
bool affinely_contained(const Ideal& a, const Ideal& b);
/// V(a) in V(b) inside projective space: x_j g in rad(a) for all variables
/// x_j and generators g of b.
bool projectively_contained(const Ideal& a, const Ideal& b);

/// Exact at positions lo..j when b_i = beta_i + beta_{i-1} and
/// codim I_{beta_i}(phi_i) >= j + 1 - i for all i <= j. Returns the first
/// position where this fails (hi + 1 if none). Throws ValidationError for
/// the zero module.
int exactness_threshold(const UniversalAomoto& u, const GenericRanks& ranks);

/// I_{beta_i + 1 - k}(phi_i) + I_Q in S.
Ideal fitting_locus(const UniversalAomoto& u, const GenericRanks& ranks, int i, int k);

std::vector<Verdict> verify_rank_identity(const UniversalAomoto& u, const GenericRanks& ranks, int a);
std::vector<Verdict> verify_fitting_claims(const UniversalAomoto& u, const GenericRanks& ranks, int a);
std::vector<Verdict> verify_inclusions(const UniversalAomoto& u, int a);
std::vector<Verdict> verify_codim_bounds(const UniversalAomoto& u, const GenericRanks& ranks, int a);
/// b_i >= C(a, i) (polynomial coordinate ring only) and beta_i >= a - i.
std::vector<Verdict> binomial_bound(const GenericRanks& ranks, int a, bool polynomial_ring);

/// Left: dim H^{a-i} of the truncated complex at eta by pointwise ranks.
/// Right: Tor_i from the ranks of phi at eta read off determinantal ideals.
struct TorComparison {
  std::size_t left = 0;
  std::size_t right = 0;
};
TorComparison tor_crosscheck(const UniversalAomoto& u, int a, const Vector& eta, int i);

struct ResonanceReport {
  int a = 0;
  GenericRanks ranks;
  long chi_a = 0;
  std::map<int, ProjectiveCodim> q;
  std::vector<Verdict> claims;
  std::map<int, ChernSeries> chern;
  std::vector<std::string> flags;
};
ResonanceReport analyze(const DglaPair& p);

}  // namespace cjl
