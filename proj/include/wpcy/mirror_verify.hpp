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

#ifndef WPCY_MIRROR_VERIFY_HPP_
#define WPCY_MIRROR_VERIFY_HPP_

#include <optional>
#include <string>
#include <vector>

#include "wpcy/efunction.hpp"
#include "wpcy/stringy.hpp"
#include "wpcy/weights.hpp"

namespace wpcy {

/// h^{p,q}_str of the mirror against h^{n-p,q} of the orbifold side.
struct HodgePair {
  long p = 0;
  long q = 0;
  Integer mirror;
  Integer orbifold;
  bool ok = false;
};

struct VerificationReport {
  std::vector<long> weights;
  long degree = 0;
  bool ip = false;
  bool transverse = false;

  EFunction stringy;
  EFunction orbifold;
  bool global_identity = false;
  std::vector<long> per_l_failures;
  bool stringy_polynomial = false;

  std::optional<HodgeTable> hodge_mirror;    // from the stringy E-polynomial
  std::optional<HodgeTable> hodge_orbifold;  // from (-u)^n E(1/u, v)
  std::string hodge_error;                   // why a table is missing
  std::vector<HodgePair> hodge_mirror_pairs;
  /// Transverse inputs only: the orbifold Poincare polynomial at (-u, -v)
  /// reproduces the stringy polynomial.
  std::optional<bool> poincare_agrees;

  Rational euler_str;  // limit of the stringy side at u = v = 1
  Rational euler_orb;  // orbifold Euler number from the double sum over l, r
  bool euler_consistent = false;

  bool no_mirror() const { return !stringy_polynomial; }
  /// "pass", "fail", or "n/a" when there is no mirror to compare against.
  std::string status() const;
};

/// Throws kNotIP.
VerificationReport Verify(const WeightVector& wv, const StringyOptions& opts = {});

/// E^(l)_str == P^(l). Throws kOutOfRange, kNotIP.
bool PerLCheck(const WeightVector& wv, long l, const StringyOptions& opts = {});

}  // namespace wpcy

#endif  // WPCY_MIRROR_VERIFY_HPP_
