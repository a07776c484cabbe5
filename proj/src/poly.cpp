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

#include "wpcy/poly.hpp"

#include <map>
#include <mutex>
#include <sstream>

#include "wpcy/errors.hpp"

namespace wpcy {

Poly::Poly(const Rational& c) {
  if (c != 0) coeffs_.push_back(c);
}

Poly::Poly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

Poly Poly::Monomial(const Rational& c, std::size_t degree) {
  if (c == 0) return {};
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return Poly(std::move(v));
}

Poly Poly::OneMinusPower(std::size_t m) {
  if (m == 0) return {};
  std::vector<Rational> v(m + 1);
  v[0] = 1;
  v[m] = -1;
  return Poly(std::move(v));
}

const Poly& Poly::Cyclotomic(std::size_t n) {
  static std::mutex mu;
  static std::map<std::size_t, Poly> cache;
  if (n == 0) throw Error(ErrorKind::kInvalidArgument, "cyclotomic index 0");
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  // t^n - 1 = prod_{d | n} Phi_d.
  Poly p = -OneMinusPower(n);
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d == 0) p = ExactDiv(p, Cyclotomic(d));
  }
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(n, std::move(p)).first->second;
}

Rational Poly::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

Rational Poly::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

Poly Poly::shifted(std::size_t k) const {
  if (is_zero() || k == 0) return *this;
  std::vector<Rational> v(k);
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  return Poly(std::move(v));
}

Poly Poly::reversed(std::size_t n) const {
  if (is_zero()) return {};
  if (static_cast<long>(n) < degree()) {
    throw Error(ErrorKind::kInvalidArgument, "reversal length below degree");
  }
  std::vector<Rational> v(n + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[n - i] = coeffs_[i];
  return Poly(std::move(v));
}

std::size_t Poly::low_order() const {
  std::size_t k = 0;
  while (k < coeffs_.size() && coeffs_[k] == 0) ++k;
  return is_zero() ? 0 : k;
}

Poly Poly::monic() const {
  if (is_zero()) return {};
  Rational inv = 1 / leading();
  return *this * inv;
}

Poly Poly::pow(unsigned e) const {
  Poly result(1);
  Poly base = *this;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e > 0) base *= base;
  }
  return result;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> v(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
      if (o.coeffs_[j] == 0) continue;
      v[i + j] += coeffs_[i] * o.coeffs_[j];
    }
  }
  coeffs_ = std::move(v);
  trim();
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

std::string Poly::to_string(std::string_view var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly operator+(Poly a, const Poly& b) { return a += b; }
Poly operator-(Poly a, const Poly& b) { return a -= b; }
Poly operator-(Poly a) { return a *= Rational(-1); }
Poly operator*(const Poly& a, const Poly& b) {
  Poly r = a;
  r *= b;
  return r;
}
Poly operator*(Poly a, const Rational& c) { return a *= c; }
Poly operator*(const Rational& c, Poly a) { return a *= c; }

std::pair<Poly, Poly> DivMod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw Error(ErrorKind::kInvalidArgument, "division by zero polynomial");
  if (a.degree() < b.degree()) return {Poly(), a};
  std::vector<Rational> rem = a.coefficients();
  const auto& bc = b.coefficients();
  const std::size_t db = bc.size() - 1;
  std::vector<Rational> quot(rem.size() - db);
  const Rational inv_lead = 1 / bc.back();
  for (std::size_t k = quot.size(); k-- > 0;) {
    Rational q = rem[k + db] * inv_lead;
    if (q == 0) continue;
    quot[k] = q;
    for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= q * bc[j];
  }
  rem.resize(db);
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly ExactDiv(const Poly& a, const Poly& b) {
  auto [q, r] = DivMod(a, b);
  if (!r.is_zero()) {
    throw Error(ErrorKind::kDivisionNotExact,
                "(" + a.to_string() + ") / (" + b.to_string() + ")");
  }
  return q;
}

Poly Gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = DivMod(a, b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

}  // namespace wpcy
