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

#include "wpcy/orbifold.hpp"

#include <map>
#include <numeric>

#include "wpcy/errors.hpp"
#include "wpcy/frac_poly.hpp"

namespace wpcy {

namespace {

// prod_{i in S} (1 - s^{w-w_i}) / (1 - s^{w_i}) with every denominator
// completed to 1 - t^{m_i}: returns the numerator in s = t^{1/w} and
// appends the factors (m_i, 1) to `den`.
FracPoly UntwistedNumerator(const WeightVector& wv, IndexSet S, std::vector<OneMinusFactor>& den) {
  const long w = wv.degree();
  FracPoly num = FracPoly::Monomial(w, 1, 0);
  for (std::size_t i = 0; i < wv.size(); ++i) {
    if (!S.contains(i)) continue;
    const long wi = wv.weight(i);
    const long lcm = std::lcm(wi, w);
    num = num.times_one_minus(w - wi).times_one_minus(lcm).divided_by_one_minus(wi);
    den.push_back({lcm / w, 1});
  }
  return num;
}

IndexSet Fixed(const WeightVector& wv, long l) {
  return wv.elements()[static_cast<std::size_t>(l)].support.complement(wv.size());
}

}  // namespace

RationalT UntwistedBracket(const WeightVector& wv, IndexSet S) {
  std::vector<OneMinusFactor> den;
  FracPoly num = UntwistedNumerator(wv, S, den);
  long lift = 0;
  for (std::size_t i = 0; i < wv.size(); ++i) {
    if (S.contains(i)) lift += wv.weight(i);
  }
  Poly projected = IntegralProject(num.shifted(lift)).to_poly();
  return RationalT::FromFactored(std::move(projected), den, -1);
}

OrbifoldEResult MirrorOrbifoldE(const WeightVector& wv) {
  OrbifoldEResult result;
  result.formal = !wv.transverse();
  std::map<IndexSet, RationalT> cache;
  for (const auto& e : wv.elements()) {
    const IndexSet S = e.support.complement(wv.size());
    auto it = cache.find(S);
    if (it == cache.end()) it = cache.emplace(S, UntwistedBracket(wv, S)).first;
    RationalT r = e.size % 2 == 0 ? it->second : -it->second;
    EFunction piece = EFunction::Monomial(e.age, e.size - e.age, r);
    result.value += piece;
    result.per_l.push_back(std::move(piece));
  }
  result.euler = result.value.value_at_one();
  return result;
}

Rational VafaEuler(const WeightVector& wv) {
  const long w = wv.degree();
  const std::size_t n = wv.size();
  std::vector<Rational> by_mask(std::size_t{1} << n);
  for (std::uint32_t bits = 0; bits < by_mask.size(); ++bits) {
    Rational p = 1;
    for (std::size_t i = 0; i < n; ++i) {
      if ((bits >> i) & 1U) p *= 1 - MakeRational(w, wv.weight(i));
    }
    by_mask[bits] = p;
  }
  Rational sum = 0;
  for (long l = 0; l < w; ++l) {
    const std::uint32_t a = Fixed(wv, l).bits();
    for (long r = 0; r < w; ++r) sum += by_mask[a & Fixed(wv, r).bits()];
  }
  return sum / w;
}

EFunction VafaTerm(const WeightVector& wv, long l) {
  const auto& e = Element(wv, l);
  const long w = wv.degree();
  const IndexSet S = e.support.complement(wv.size());
  std::vector<OneMinusFactor> den;
  FracPoly num = UntwistedNumerator(wv, S, den);

  // (t tbar)^{1/2 - q_i} (t/tbar)^{theta_i - 1/2} over the moved coordinates.
  long both = 0;
  long ratio = 0;
  for (std::size_t i = 0; i < wv.size(); ++i) {
    if (S.contains(i)) continue;
    both += w - 2 * wv.weight(i);
    ratio += 2 * e.residues[i] - w;
  }
  const long unit = 2 * w;
  std::map<long, Rational> diagonal;  // power of t*tbar -> coefficient
  long offset_t = 0;
  long offset_tbar = 0;
  for (const auto& [k, c] : num.terms()) {
    const long base = 2 * k + both;
    const long te = base + ratio;
    const long tbe = base - ratio;
    if (Mod(te, unit) != 0 || Mod(tbe, unit) != 0) continue;
    const long p = te / unit;
    const long q = tbe / unit;
    const long m = std::min(p, q);
    offset_t = p - m;
    offset_tbar = q - m;
    diagonal[m] += c;
  }
  if (diagonal.empty()) return EFunction();
  const long low = diagonal.begin()->first;
  std::vector<Rational> coeffs(static_cast<std::size_t>(diagonal.rbegin()->first - low) + 1);
  for (const auto& [m, c] : diagonal) coeffs[static_cast<std::size_t>(m - low)] = c;
  return EFunction::Monomial(offset_t, offset_tbar,
                             RationalT::FromFactored(Poly(std::move(coeffs)), den, low));
}

BiPoly VafaPoincare(const WeightVector& wv) {
  EFunction total;
  for (long l = 0; l < wv.degree(); ++l) total += VafaTerm(wv, l);
  if (!total.is_polynomial()) {
    throw Error(ErrorKind::kNonIntegerCoefficient,
                "orbifold Poincare sum of " + wv.to_string() + " is not a polynomial");
  }
  BiPoly p = total.to_polynomial();
  if (!p.has_integer_coefficients()) {
    throw Error(ErrorKind::kNonIntegerCoefficient,
                "orbifold Poincare polynomial of " + wv.to_string() + " has fractions");
  }
  return p;
}

bool QIdentityCheck(const WeightVector& wv) {
  const auto mirror = MirrorOrbifoldE(wv);
  for (const auto& e : wv.elements()) {
    EFunction restated = mirror.per_l[static_cast<std::size_t>(e.l)];
    if (e.size % 2 == 1) restated *= RationalT(-1);
    if (!(VafaTerm(wv, e.l) == restated)) return false;
  }
  return true;
}

}  // namespace wpcy
