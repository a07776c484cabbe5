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

#ifndef WPCY_STRINGY_HPP_
#define WPCY_STRINGY_HPP_

#include <optional>
#include <vector>

#include "wpcy/bipoly.hpp"
#include "wpcy/efunction.hpp"
#include "wpcy/rational_t.hpp"
#include "wpcy/weights.hpp"

namespace wpcy {

struct StringyOptions {
  /// Extra series terms used to certify each bracket reconstruction.
  /// Unset: MIRROR_STRINGY_GUARD if present, else the denominator degree.
  std::optional<long> guard;
};

/// [prod_{j not in J} 1/(t^{q_j} - 1)]_int as a rational function of t.
RationalT Bracket(const WeightVector& wv, IndexSet J, const StringyOptions& opts = {});

/// Brackets for every J, indexed by J.bits().
std::vector<RationalT> BracketTable(const WeightVector& wv, const StringyOptions& opts = {});

struct StringyTerm {
  IndexSet J;
  BiPoly face;       // E-polynomial of the face
  RationalT factor;  // (uv - 1)^{d+1-|J|} * bracket(J)
  EFunction value;   // face * factor
};

/// One term per J with |J| >= 2, ordered by J.bits(). Throws kNotIP.
std::vector<StringyTerm> StringyTerms(const WeightVector& wv, const StringyOptions& opts = {});

/// Stringy E-function of the mirror, sum of StringyTerms. Throws kNotIP.
EFunction StringyE(const WeightVector& wv, const StringyOptions& opts = {});

/// The pieces E^(l), l = 0..w-1, summing to StringyE.
std::vector<EFunction> StringyEPerL(const WeightVector& wv, const StringyOptions& opts = {});
/// Single piece; throws kOutOfRange.
EFunction StringyEPerL(const WeightVector& wv, long l, const StringyOptions& opts = {});

bool IsPolynomial(const EFunction& e);
BiPoly ToPolynomial(const EFunction& e);

/// Value of StringyE at u = v = 1 via limits of the individual terms.
Rational StringyEuler(const WeightVector& wv, const StringyOptions& opts = {});

/// h^{p,q} for 0 <= p, q <= dim.
struct HodgeTable {
  long dim = 0;
  std::vector<std::vector<Integer>> h;

  const Integer& at(long p, long q) const {
    return h[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)];
  }
  bool symmetric() const;
  /// h^{p,q} = h^{dim-p,dim-q}.
  bool poincare_dual() const;
  /// sum (-1)^{p+q} h^{p,q} u^p v^q.
  BiPoly to_polynomial() const;
};

/// Reads h^{p,q} = (-1)^{p+q} [u^p v^q] p. Throws kSignPatternViolation on a
/// coefficient of the wrong sign, kNonIntegerCoefficient on a fraction and
/// kInvalidArgument on a monomial outside the dim x dim grid.
HodgeTable ExtractHodge(const BiPoly& p, long dim);

}  // namespace wpcy

#endif  // WPCY_STRINGY_HPP_
