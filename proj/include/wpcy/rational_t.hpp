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

#ifndef WPCY_RATIONAL_T_HPP_
#define WPCY_RATIONAL_T_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wpcy/numeric.hpp"
#include "wpcy/poly.hpp"

namespace wpcy {

/// A (1 - t^m)^e denominator factor.
struct OneMinusFactor {
  long m = 1;
  int e = 1;
};

/// Rational function of one variable t whose denominator is a product of
/// cyclotomic polynomials, held as
///
///     t^shift * numerator(t) / prod_k Phi_k(t)^{e_k}.
///
/// The representation is canonical: t does not divide the numerator and no
/// Phi_k present in the denominator divides it. Since the Phi_k and t are
/// distinct irreducibles, two values are equal as rational functions exactly
/// when their representations coincide. Every (1 - t^m) factor splits as
/// -prod_{k | m} Phi_k, so denominators built from such factors are covered.
class RationalT {
 public:
  RationalT() = default;
  RationalT(const Rational& c);  // NOLINT(google-explicit-constructor)
  RationalT(long c) : RationalT(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  RationalT(const Poly& p);  // NOLINT(google-explicit-constructor)

  /// t^shift * numerator / prod (1 - t^m)^e, reduced.
  static RationalT FromFactored(Poly numerator, std::span<const OneMinusFactor> denominator,
                                long shift = 0);
  /// c * t^k.
  static RationalT Monomial(const Rational& c, long k);

  const Poly& numerator() const { return num_; }
  const std::map<std::size_t, int>& cyclotomic_denominator() const { return den_; }
  long shift() const { return shift_; }

  bool is_zero() const { return num_.is_zero(); }
  /// True iff the denominator is trivial and the shift is non-negative.
  bool is_polynomial() const;
  /// Throws kNotPolynomial unless is_polynomial().
  Poly to_poly() const;

  /// numerator * t^max(shift, 0).
  Poly expanded_numerator() const;
  /// prod Phi_k^{e_k} * t^max(-shift, 0).
  Poly expanded_denominator() const;
  int pole_order_at_one() const;

  /// Value at an exact point where the denominator does not vanish.
  Rational operator()(const Rational& x) const;

  /// The substitution t -> 1/t.
  RationalT inverted() const;
  /// Multiplication by t^k.
  RationalT shifted(long k) const;

  /// Taylor coefficients at t = 0 of degrees 0..order; needs shift >= 0.
  std::vector<Rational> series(std::size_t order) const;

  RationalT& operator+=(const RationalT& o);
  RationalT& operator-=(const RationalT& o);
  RationalT& operator*=(const RationalT& o);

  friend bool operator==(const RationalT&, const RationalT&) = default;

  std::string to_string(std::string_view var = "t") const;

 private:
  void canonicalize();

  Poly num_;
  std::map<std::size_t, int> den_;
  long shift_ = 0;
};

RationalT operator+(RationalT a, const RationalT& b);
RationalT operator-(RationalT a, const RationalT& b);
RationalT operator-(RationalT a);
RationalT operator*(RationalT a, const RationalT& b);

/// Equality decided by cross-multiplying the expanded numerators and
/// denominators; independent of the canonical form.
bool CrossEqual(const RationalT& a, const RationalT& b);

/// Limit at t = 1. Throws kPoleAtOne if the limit is infinite.
Rational LimitAtOne(const RationalT& r);

/// Guard band override taken from MIRROR_STRINGY_GUARD, if set and valid.
std::optional<long> GuardBandFromEnv();

/// Rebuilds P(t) / prod (1 - t^m)^e from the series sum_{k=1..K} N(k) t^k,
/// where counts[k - 1] = N(k). The numerator degree may not exceed
/// D = sum m*e; the coefficients of degrees D+1..K of the product of the
/// series with the denominator must vanish, and at least `guard` of them
/// are required (default D). Throws kReconstructionFailure otherwise.
RationalT RationalFromCounts(std::span<const Integer> counts,
                             std::span<const OneMinusFactor> denominator,
                             std::optional<long> guard = std::nullopt);

}  // namespace wpcy

#endif  // WPCY_RATIONAL_T_HPP_
