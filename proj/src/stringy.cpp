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

#include "wpcy/stringy.hpp"

#include <numeric>

#include "wpcy/errors.hpp"
#include "wpcy/face_epoly.hpp"

namespace wpcy {

namespace {

void RequireIp(const WeightVector& wv) {
  if (!wv.ip()) throw Error(ErrorKind::kNotIP, wv.to_string() + " lacks the IP property");
}

RationalT TMinusOnePow(long n) { return RationalT(Poly{-1, 1}.pow(static_cast<unsigned>(n))); }

// ((t-1)^{n-1} - (-1)^{n-1}) / t.
RationalT UntwistedHead(long n) {
  Poly head = Poly{-1, 1}.pow(static_cast<unsigned>(n - 1));
  head -= Poly(n % 2 == 0 ? -1L : 1L);
  return RationalT(head).shifted(-1);
}

// sum over J containing `support`, |J| >= 2, of (-1)^|J| (t-1)^{d+1-|J|} B_J.
RationalT TwistedSum(const WeightVector& wv, IndexSet support,
                     const std::vector<RationalT>& brackets) {
  const std::size_t n = wv.size();
  RationalT sum;
  for (std::uint32_t bits = 0; bits < brackets.size(); ++bits) {
    IndexSet J(bits);
    if (!J.includes(support) || J.count() < 2) continue;
    const long k = static_cast<long>(J.count());
    RationalT term = TMinusOnePow(static_cast<long>(n) - k) * brackets[bits];
    if (k % 2 == 1) term = -term;
    sum += term;
  }
  return sum;
}

}  // namespace

RationalT Bracket(const WeightVector& wv, IndexSet J, const StringyOptions& opts) {
  const long w = wv.degree();
  std::vector<OneMinusFactor> den;
  long degree = 0;
  for (std::size_t j = 0; j < wv.size(); ++j) {
    if (J.contains(j)) continue;
    const long m = wv.weight(j) / std::gcd(wv.weight(j), w);
    den.push_back({m, 1});
    degree += m;
  }
  if (den.empty()) return RationalT(1);
  long guard = opts.guard ? *opts.guard : GuardBandFromEnv().value_or(degree);
  if (guard < 0) throw Error(ErrorKind::kInvalidArgument, "negative guard band");
  const long order = degree + guard + 1;
  std::vector<Integer> counts = LatticeCounts(wv, J, order);
  // counts[0] vanishes for a proper J; the series starts at x^1 with x = 1/t.
  RationalT at_infinity = RationalFromCounts(
      std::span<const Integer>(counts).subspan(1), den, guard);
#ifndef NDEBUG
  const auto series = at_infinity.series(static_cast<std::size_t>(order));
  for (long k = 1; k <= order; ++k) {
    if (series[static_cast<std::size_t>(k)] != counts[static_cast<std::size_t>(k)]) {
      throw Error(ErrorKind::kReconstructionFailure,
                  "bracket " + J.to_string() + " disagrees with the lattice count at k = " +
                      std::to_string(k));
    }
  }
#endif
  return at_infinity.inverted();
}

std::vector<RationalT> BracketTable(const WeightVector& wv, const StringyOptions& opts) {
  const std::size_t n = wv.size();
  std::vector<RationalT> table(std::size_t{1} << n);
  for (std::uint32_t bits = 0; bits < table.size(); ++bits) {
    if (IndexSet(bits).count() >= 2) table[bits] = Bracket(wv, IndexSet(bits), opts);
  }
  return table;
}

std::vector<StringyTerm> StringyTerms(const WeightVector& wv, const StringyOptions& opts) {
  RequireIp(wv);
  const auto brackets = BracketTable(wv, opts);
  const long n = static_cast<long>(wv.size());
  std::vector<StringyTerm> terms;
  for (std::uint32_t bits = 0; bits < brackets.size(); ++bits) {
    IndexSet J(bits);
    if (J.count() < 2) continue;
    StringyTerm t;
    t.J = J;
    t.face = FaceE(wv, J).value;
    t.factor = TMinusOnePow(n - static_cast<long>(J.count())) * brackets[bits];
    t.value = EFunction::FromBiPoly(t.face) * t.factor;
    terms.push_back(std::move(t));
  }
  return terms;
}

EFunction StringyE(const WeightVector& wv, const StringyOptions& opts) {
  EFunction total;
  for (const auto& t : StringyTerms(wv, opts)) total += t.value;
  return total;
}

std::vector<EFunction> StringyEPerL(const WeightVector& wv, const StringyOptions& opts) {
  RequireIp(wv);
  const auto brackets = BracketTable(wv, opts);
  const long n = static_cast<long>(wv.size());
  std::vector<EFunction> pieces;
  pieces.reserve(static_cast<std::size_t>(wv.degree()));

  RationalT untwisted;
  for (std::uint32_t bits = 0; bits < brackets.size(); ++bits) {
    const long k = static_cast<long>(IndexSet(bits).count());
    if (k < 2) continue;
    untwisted += UntwistedHead(k) * TMinusOnePow(n - k) * brackets[bits];
  }
  pieces.emplace_back(untwisted);

  std::map<IndexSet, RationalT> by_support;
  for (const auto& e : wv.elements()) {
    if (e.l == 0) continue;
    auto it = by_support.find(e.support);
    if (it == by_support.end()) {
      it = by_support.emplace(e.support, TwistedSum(wv, e.support, brackets)).first;
    }
    pieces.push_back(EFunction::Monomial(e.age - 1, e.size - e.age - 1, it->second));
  }
  return pieces;
}

EFunction StringyEPerL(const WeightVector& wv, long l, const StringyOptions& opts) {
  Element(wv, l);
  return StringyEPerL(wv, opts)[static_cast<std::size_t>(l)];
}

bool IsPolynomial(const EFunction& e) { return e.is_polynomial(); }
BiPoly ToPolynomial(const EFunction& e) { return e.to_polynomial(); }

Rational StringyEuler(const WeightVector& wv, const StringyOptions& opts) {
  Rational sum = 0;
  for (const auto& t : StringyTerms(wv, opts)) sum += t.value.value_at_one();
  return sum;
}

bool HodgeTable::symmetric() const {
  for (long p = 0; p <= dim; ++p) {
    for (long q = 0; q <= dim; ++q) {
      if (at(p, q) != at(q, p)) return false;
    }
  }
  return true;
}

bool HodgeTable::poincare_dual() const {
  for (long p = 0; p <= dim; ++p) {
    for (long q = 0; q <= dim; ++q) {
      if (at(p, q) != at(dim - p, dim - q)) return false;
    }
  }
  return true;
}

BiPoly HodgeTable::to_polynomial() const {
  BiPoly out;
  for (long p = 0; p <= dim; ++p) {
    for (long q = 0; q <= dim; ++q) {
      Rational c(at(p, q));
      if ((p + q) % 2 == 1) c = -c;
      out += BiPoly::Monomial(c, p, q);
    }
  }
  return out;
}

HodgeTable ExtractHodge(const BiPoly& p, long dim) {
  if (dim < 0) throw Error(ErrorKind::kInvalidArgument, "negative dimension");
  HodgeTable t;
  t.dim = dim;
  t.h.assign(static_cast<std::size_t>(dim) + 1,
             std::vector<Integer>(static_cast<std::size_t>(dim) + 1, 0));
  for (const auto& [k, c] : p.terms()) {
    const auto [a, b] = k;
    if (a > dim || b > dim) {
      throw Error(ErrorKind::kInvalidArgument, "monomial u^" + std::to_string(a) + "*v^" +
                                                   std::to_string(b) + " exceeds dimension " +
                                                   std::to_string(dim));
    }
    if (!IsInteger(c)) {
      throw Error(ErrorKind::kNonIntegerCoefficient, "coefficient " + c.get_str());
    }
    Rational h = (a + b) % 2 == 0 ? c : Rational(-c);
    if (h < 0) {
      throw Error(ErrorKind::kSignPatternViolation,
                  "coefficient " + c.get_str() + " of u^" + std::to_string(a) + "*v^" +
                      std::to_string(b));
    }
    t.h[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = h.get_num();
  }
  return t;
}

}  // namespace wpcy
