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

#ifndef WPCY_POLY_HPP_
#define WPCY_POLY_HPP_

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wpcy/numeric.hpp"

namespace wpcy {

/// Dense univariate polynomial over Q. Coefficient i multiplies t^i; the
/// coefficient vector never carries trailing zeros, so the zero polynomial
/// has no coefficients at all.
class Poly {
 public:
  Poly() = default;
  Poly(const Rational& c);  // NOLINT(google-explicit-constructor)
  Poly(long c) : Poly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  Poly(std::initializer_list<long> coeffs);
  explicit Poly(std::vector<Rational> coeffs);

  static Poly Monomial(const Rational& c, std::size_t degree);
  /// 1 - t^m.
  static Poly OneMinusPower(std::size_t m);
  /// The n-th cyclotomic polynomial. Results are memoised; safe to call
  /// from several threads.
  static const Poly& Cyclotomic(std::size_t n);

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree of the zero polynomial is -1.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coeff(std::size_t i) const;
  const Rational& leading() const { return coeffs_.back(); }

  Rational operator()(const Rational& x) const;

  /// Multiplies by t^k.
  Poly shifted(std::size_t k) const;
  /// t^n p(1/t); requires n >= degree().
  Poly reversed(std::size_t n) const;
  /// Number of trailing powers of t dividing the polynomial (0 for zero).
  std::size_t low_order() const;
  Poly monic() const;
  Poly pow(unsigned e) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rational& c);

  friend bool operator==(const Poly&, const Poly&) = default;

  std::string to_string(std::string_view var = "t") const;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

Poly operator+(Poly a, const Poly& b);
Poly operator-(Poly a, const Poly& b);
Poly operator-(Poly a);
Poly operator*(const Poly& a, const Poly& b);
Poly operator*(Poly a, const Rational& c);
Poly operator*(const Rational& c, Poly a);

/// Quotient and remainder of Euclidean division; divisor must be nonzero.
std::pair<Poly, Poly> DivMod(const Poly& a, const Poly& b);
/// a / b, throwing kDivisionNotExact on a nonzero remainder.
Poly ExactDiv(const Poly& a, const Poly& b);
/// Monic gcd over Q (Euclid with monic normalisation at every step).
Poly Gcd(Poly a, Poly b);

}  // namespace wpcy

#endif  // WPCY_POLY_HPP_
