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

#include "wpcy/efunction.hpp"

#include <algorithm>

#include "wpcy/errors.hpp"

namespace wpcy {

EFunction::EFunction(const RationalT& r) { add(0, 0, r); }

EFunction EFunction::Monomial(long p, long q, const RationalT& r) {
  EFunction e;
  e.add(p, q, r);
  return e;
}

EFunction EFunction::FromBiPoly(const BiPoly& p) {
  EFunction e;
  for (const auto& [k, c] : p.terms()) e.add(k.first, k.second, RationalT(c));
  return e;
}

RationalT EFunction::at(const EKey& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? RationalT() : it->second;
}

bool EFunction::is_polynomial() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& kv) { return kv.second.is_polynomial(); });
}

BiPoly EFunction::to_polynomial() const {
  BiPoly out;
  for (const auto& [k, r] : terms_) {
    if (!r.is_polynomial()) {
      throw Error(ErrorKind::kNotPolynomial, "term u^" + std::to_string(k.first) + "*v^" +
                                                 std::to_string(k.second) + "*(" + r.to_string() +
                                                 ") is not polynomial");
    }
    const Poly poly = r.to_poly();
    const auto& c = poly.coefficients();
    for (std::size_t i = 0; i < c.size(); ++i) {
      const long n = static_cast<long>(i);
      out += BiPoly::Monomial(c[i], k.first + n, k.second + n);
    }
  }
  return out;
}

Rational EFunction::value_at_one() const {
  Rational s = 0;
  for (const auto& [k, r] : terms_) s += LimitAtOne(r);
  return s;
}

EFunction& EFunction::operator+=(const EFunction& o) {
  for (const auto& [k, r] : o.terms_) add(k.first, k.second, r);
  return *this;
}

EFunction& EFunction::operator-=(const EFunction& o) {
  for (const auto& [k, r] : o.terms_) add(k.first, k.second, -r);
  return *this;
}

EFunction& EFunction::operator*=(const EFunction& o) {
  EFunction out;
  for (const auto& [ka, ra] : terms_) {
    for (const auto& [kb, rb] : o.terms_) {
      out.add(ka.first + kb.first, ka.second + kb.second, ra * rb);
    }
  }
  return *this = std::move(out);
}

EFunction& EFunction::operator*=(const RationalT& r) {
  if (r.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, x] : terms_) x *= r;
  return *this;
}

std::string EFunction::to_string() const {
  EFunction poly_part;
  std::string rest;
  for (const auto& [k, r] : terms_) {
    if (r.is_polynomial()) {
      poly_part.terms_.emplace(k, r);
      continue;
    }
    rest += " + ";
    if (k.first > 0) rest += k.first == 1 ? "u*" : "u^" + std::to_string(k.first) + "*";
    if (k.second > 0) rest += k.second == 1 ? "v*" : "v^" + std::to_string(k.second) + "*";
    rest += r.to_string("(u*v)");
  }
  if (rest.empty()) return poly_part.to_polynomial().to_string();
  if (poly_part.is_zero()) return rest.substr(3);
  return poly_part.to_polynomial().to_string() + rest;
}

void EFunction::add(long p, long q, const RationalT& r) {
  if (r.is_zero()) return;
  const long m = std::min(p, q);
  const EKey key{p - m, q - m};
  RationalT value = m == 0 ? r : r.shifted(m);
  auto [it, inserted] = terms_.try_emplace(key, value);
  if (!inserted) {
    it->second += value;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

EFunction operator+(EFunction a, const EFunction& b) { return a += b; }
EFunction operator-(EFunction a, const EFunction& b) { return a -= b; }
EFunction operator*(EFunction a, const EFunction& b) { return a *= b; }
EFunction operator*(EFunction a, const RationalT& r) { return a *= r; }

}  // namespace wpcy
