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

#ifndef WPCY_EFUNCTION_HPP_
#define WPCY_EFUNCTION_HPP_

#include <map>
#include <string>
#include <utility>

#include "wpcy/bipoly.hpp"
#include "wpcy/rational_t.hpp"

namespace wpcy {

/// Key (a, b) of the monomial u^a v^b; one of a, b is always zero.
using EKey = std::pair<long, long>;

/// Finite sum  sum u^a v^b R_ab(uv)  with R_ab rational in t = uv. Keys are
/// normalised so that min(a, b) = 0, the common power of uv being moved into
/// R_ab. Zero entries are dropped, so equality is structural.
class EFunction {
 public:
  EFunction() = default;
  EFunction(const RationalT& r);  // NOLINT(google-explicit-constructor)

  /// u^p v^q r(uv) for arbitrary integers p, q.
  static EFunction Monomial(long p, long q, const RationalT& r = RationalT(1));
  static EFunction FromBiPoly(const BiPoly& p);

  const std::map<EKey, RationalT>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  RationalT at(const EKey& key) const;

  bool is_polynomial() const;
  /// Throws kNotPolynomial unless is_polynomial().
  BiPoly to_polynomial() const;
  /// Value at u = v = 1, summing the limits of the R_ab.
  Rational value_at_one() const;

  EFunction& operator+=(const EFunction& o);
  EFunction& operator-=(const EFunction& o);
  EFunction& operator*=(const EFunction& o);
  EFunction& operator*=(const RationalT& r);

  friend bool operator==(const EFunction&, const EFunction&) = default;

  /// Polynomial part in graded order, then "u^a*v^b*(N)/(D)" for the rest.
  std::string to_string() const;

 private:
  void add(long p, long q, const RationalT& r);

  std::map<EKey, RationalT> terms_;
};

EFunction operator+(EFunction a, const EFunction& b);
EFunction operator-(EFunction a, const EFunction& b);
EFunction operator*(EFunction a, const EFunction& b);
EFunction operator*(EFunction a, const RationalT& r);

}  // namespace wpcy

#endif  // WPCY_EFUNCTION_HPP_
