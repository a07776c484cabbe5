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

#include "wpcy/bipoly.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include "wpcy/errors.hpp"

namespace wpcy {

namespace {

Rational Power(const Rational& x, long e) {
  Rational r = 1;
  for (long i = 0; i < e; ++i) r *= x;
  return r;
}

std::string RenderMonomial(long p, long q) {
  if (p == q) return p == 1 ? "u*v" : "(u*v)^" + std::to_string(p);
  std::string s;
  if (p > 0) s += p == 1 ? "u" : "u^" + std::to_string(p);
  if (q > 0) {
    if (!s.empty()) s += "*";
    s += q == 1 ? "v" : "v^" + std::to_string(q);
  }
  return s;
}

}  // namespace

BiPoly::BiPoly(const Rational& c) { add(0, 0, c); }

BiPoly BiPoly::Monomial(const Rational& c, long p, long q) {
  if (p < 0 || q < 0) throw Error(ErrorKind::kNegativeExponent, "BiPoly monomial exponent");
  BiPoly b;
  b.add(p, q, c);
  return b;
}

BiPoly BiPoly::InUV(const Poly& p) {
  BiPoly b;
  const auto& c = p.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i) {
    b.add(static_cast<long>(i), static_cast<long>(i), c[i]);
  }
  return b;
}

Rational BiPoly::coeff(long p, long q) const {
  auto it = terms_.find({p, q});
  return it == terms_.end() ? Rational(0) : it->second;
}

long BiPoly::max_u_degree() const {
  long m = -1;
  for (const auto& [k, c] : terms_) m = std::max(m, k.first);
  return m;
}

long BiPoly::max_v_degree() const {
  long m = -1;
  for (const auto& [k, c] : terms_) m = std::max(m, k.second);
  return m;
}

bool BiPoly::has_integer_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& kv) { return IsInteger(kv.second); });
}

Rational BiPoly::operator()(const Rational& u, const Rational& v) const {
  Rational s = 0;
  for (const auto& [k, c] : terms_) s += c * Power(u, k.first) * Power(v, k.second);
  return s;
}

BiPoly BiPoly::divided_by_uv() const {
  BiPoly b;
  for (const auto& [k, c] : terms_) {
    if (k.first < 1 || k.second < 1) {
      throw Error(ErrorKind::kDivisionNotExact,
                  "monomial u^" + std::to_string(k.first) + " v^" + std::to_string(k.second) +
                      " is not divisible by uv");
    }
    b.add(k.first - 1, k.second - 1, c);
  }
  return b;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  for (const auto& [k, c] : o.terms_) add(k.first, k.second, c);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  for (const auto& [k, c] : o.terms_) add(k.first, k.second, -c);
  return *this;
}

BiPoly& BiPoly::operator*=(const BiPoly& o) {
  BiPoly r;
  for (const auto& [ka, ca] : terms_) {
    for (const auto& [kb, cb] : o.terms_) r.add(ka.first + kb.first, ka.second + kb.second, ca * cb);
  }
  return *this = std::move(r);
}

BiPoly& BiPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, x] : terms_) x *= c;
  return *this;
}

std::string BiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<BiDegree, Rational>> sorted(terms_.begin(), terms_.end());
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    long da = a.first.first + a.first.second;
    long db = b.first.first + b.first.second;
    if (da != db) return da < db;
    return a.first.first > b.first.first;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : sorted) {
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    Rational mag = abs(c);
    if (k.first == 0 && k.second == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << RenderMonomial(k.first, k.second);
  }
  return os.str();
}

void BiPoly::add(long p, long q, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace({p, q}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
BiPoly operator-(BiPoly a) { return a *= Rational(-1); }
BiPoly operator*(BiPoly a, const BiPoly& b) { return a *= b; }
BiPoly operator*(BiPoly a, const Rational& c) { return a *= c; }

BiPoly MirrorTransform(const BiPoly& p, long dim) {
  BiPoly r;
  const Rational sign = dim % 2 == 0 ? 1 : -1;
  for (const auto& [k, c] : p.terms()) {
    if (k.first > dim) {
      throw Error(ErrorKind::kNegativeExponent,
                  "u-degree " + std::to_string(k.first) + " exceeds dimension " +
                      std::to_string(dim));
    }
    r += BiPoly::Monomial(sign * c, dim - k.first, k.second);
  }
  return r;
}

BiPoly SignTwist(const BiPoly& p) {
  BiPoly r;
  for (const auto& [k, c] : p.terms()) {
    r += BiPoly::Monomial((k.first + k.second) % 2 == 0 ? c : Rational(-c), k.first, k.second);
  }
  return r;
}

}  // namespace wpcy
