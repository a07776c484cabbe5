// Copyright 2026 The wpcy Authors
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

#ifndef WPCY_ORBIFOLD_HPP_
#define WPCY_ORBIFOLD_HPP_

#include <vector>

#include "wpcy/bipoly.hpp"
#include "wpcy/efunction.hpp"
#include "wpcy/rational_t.hpp"
#include "wpcy/weights.hpp"

namespace wpcy {

struct OrbifoldEResult {
  EFunction value;
  Rational euler;
  std::vector<EFunction> per_l;  // indexed by l
  /// The input is not transverse, so the value carries no orbifold meaning.
  bool formal = false;
};

/// (1/t) [prod_{i in S} (t^{q_i} - t) / (1 - t^{q_i})]_int.
RationalT UntwistedBracket(const WeightVector& wv, IndexSet S);

/// (1/uv) sum_l [prod_{theta_i(l) = 0} ((uv)^{q_i} - uv)/(1 - (uv)^{q_i})]_int
///   * (-1)^size(l) u^age(l) v^{size(l)-age(l)}.
OrbifoldEResult MirrorOrbifoldE(const WeightVector& wv);

/// (1/w) sum_{l,r} prod_{i : l q_i, r q_i integral} (1 - 1/q_i).
Rational VafaEuler(const WeightVector& wv);

/// The l-th summand of the orbifold Poincare polynomial in (t, tbar),
/// written with u = t, v = tbar. Exponents are tracked in units of 1/(2w).
EFunction VafaTerm(const WeightVector& wv, long l);

/// sum_l VafaTerm(l). Throws kNonIntegerCoefficient unless the sum is a
/// polynomial with integer coefficients.
BiPoly VafaPoincare(const WeightVector& wv);

/// Per-l agreement of VafaTerm with the age/size form of the same sum.
bool QIdentityCheck(const WeightVector& wv);

}  // namespace wpcy

#endif  // WPCY_ORBIFOLD_HPP_
