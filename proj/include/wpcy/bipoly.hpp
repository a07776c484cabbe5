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

#ifndef WPCY_BIPOLY_HPP_
#define WPCY_BIPOLY_HPP_

#include <map>
#include <string>
#include <utility>

#include "wpcy/numeric.hpp"
#include "wpcy/poly.hpp"

namespace wpcy {

/// Exponent pair (p, q) of the monomial u^p v^q.
using BiDegree = std::pair<long, long>;

/// Polynomial in u, v over Q with non-negative exponents.
class BiPoly {
 public:
  BiPoly() = default;
  BiPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  BiPoly(long c) : BiPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)

  static BiPoly Monomial(const Rational& c, long p, long q);
  /// p(uv) for a univariate p.
  static BiPoly InUV(const Poly& p);

  const std::map<BiDegree, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(long p, long q) const;
  long max_u_degree() const;
  long max_v_degree() const;
  bool has_integer_coefficients() const;

  Rational operator()(const Rational& u, const Rational& v) const;

  /// Exact quotient by uv; kDivisionNotExact if some monomial lacks u or v.
  BiPoly divided_by_uv() const;

  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  BiPoly& operator*=(const BiPoly& o);
  BiPoly& operator*=(const Rational& c);

  friend bool operator==(const BiPoly&, const BiPoly&) = default;

  /// Graded order: total degree ascending, then u-degree descending, e.g.
  /// "1 + u^2 + 20*u*v + v^2 + (u*v)^2".
  std::string to_string() const;

 private:
  void add(long p, long q, const Rational& c);

  std::map<BiDegree, Rational> terms_;
};

BiPoly operator+(BiPoly a, const BiPoly& b);
BiPoly operator-(BiPoly a, const BiPoly& b);
BiPoly operator-(BiPoly a);
BiPoly operator*(BiPoly a, const BiPoly& b);
BiPoly operator*(BiPoly a, const Rational& c);

/// (-u)^dim * p(1/u, v). Throws kNegativeExponent if p has u-degree > dim.
BiPoly MirrorTransform(const BiPoly& p, long dim);

/// p(-u, -v): flips the sign of every monomial of odd total degree.
BiPoly SignTwist(const BiPoly& p);

}  // namespace wpcy

#endif  // WPCY_BIPOLY_HPP_
