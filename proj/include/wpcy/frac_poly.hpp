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

#ifndef WPCY_FRAC_POLY_HPP_
#define WPCY_FRAC_POLY_HPP_

#include <map>
#include <string>
#include <string_view>
#include <utility>

#include "wpcy/numeric.hpp"
#include "wpcy/poly.hpp"

namespace wpcy {

/// Finite sum of monomials c * t^{e/w} with a fixed exponent denominator w.
/// Exponents are stored as the integer numerators e; zero coefficients are
/// never stored. Binary operations between different denominators rescale
/// both operands to the lcm first.
class FracPoly {
 public:
  explicit FracPoly(long denominator = 1);
  FracPoly(long denominator, std::map<long, Rational> terms);

  /// c * t^{e/w}.
  static FracPoly Monomial(long denominator, const Rational& c, long e);
  /// An ordinary polynomial in t, embedded with denominator w.
  static FracPoly FromPoly(const Poly& p, long denominator = 1);

  long denominator() const { return denominator_; }
  const std::map<long, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Every exponent numerator is divisible by the denominator.
  bool is_integral() const;
  Rational coeff(long e) const;
  /// Sum of coefficients, i.e. the value at t = 1.
  Rational at_one() const;

  /// Same value written over denominator * factor.
  FracPoly rescaled(long factor) const;

  /// Multiplies by (1 - t^{k/w}), k > 0.
  FracPoly times_one_minus(long k) const;
  /// Exact quotient by (1 - t^{k/w}); kDivisionNotExact otherwise.
  FracPoly divided_by_one_minus(long k) const;
  /// Multiplies by t^{e/w}.
  FracPoly shifted(long e) const;

  /// For an integral value with non-negative exponents: the polynomial in t.
  Poly to_poly() const;

  FracPoly& operator+=(const FracPoly& o);
  FracPoly& operator-=(const FracPoly& o);
  FracPoly& operator*=(const Rational& c);

  std::string to_string(std::string_view var = "t") const;

 private:
  void add(long e, const Rational& c);

  long denominator_;
  std::map<long, Rational> terms_;
};

FracPoly operator+(FracPoly a, const FracPoly& b);
FracPoly operator-(FracPoly a, const FracPoly& b);
FracPoly operator*(const FracPoly& a, const FracPoly& b);
FracPoly operator*(FracPoly a, const Rational& c);
bool operator==(const FracPoly& a, const FracPoly& b);

/// [f]_int: the sub-sum of monomials with integer exponent.
FracPoly IntegralProject(const FracPoly& f);

/// Checks [p q]_int == p [q]_int. p must be integral.
bool ReynoldsFactorProperty(const FracPoly& p, const FracPoly& q);

}  // namespace wpcy

#endif  // WPCY_FRAC_POLY_HPP_
