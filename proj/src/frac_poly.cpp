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

#include "wpcy/frac_poly.hpp"

#include <numeric>
#include <sstream>
#include <vector>

#include "wpcy/errors.hpp"

namespace wpcy {

FracPoly::FracPoly(long denominator) : denominator_(denominator) {
  if (denominator <= 0) {
    throw Error(ErrorKind::kInvalidArgument, "exponent denominator must be positive");
  }
}

FracPoly::FracPoly(long denominator, std::map<long, Rational> terms)
    : FracPoly(denominator) {
  for (auto& [e, c] : terms) add(e, c);
}

FracPoly FracPoly::Monomial(long denominator, const Rational& c, long e) {
  FracPoly f(denominator);
  f.add(e, c);
  return f;
}

FracPoly FracPoly::FromPoly(const Poly& p, long denominator) {
  FracPoly f(denominator);
  const auto& c = p.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i) {
    f.add(static_cast<long>(i) * denominator, c[i]);
  }
  return f;
}

bool FracPoly::is_integral() const {
  for (const auto& [e, c] : terms_) {
    if (Mod(e, denominator_) != 0) return false;
  }
  return true;
}

Rational FracPoly::coeff(long e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational FracPoly::at_one() const {
  Rational s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

FracPoly FracPoly::rescaled(long factor) const {
  if (factor <= 0) throw Error(ErrorKind::kInvalidArgument, "rescale factor must be positive");
  FracPoly f(denominator_ * factor);
  for (const auto& [e, c] : terms_) f.terms_.emplace(e * factor, c);
  return f;
}

FracPoly FracPoly::times_one_minus(long k) const {
  if (k <= 0) throw Error(ErrorKind::kInvalidArgument, "times_one_minus needs k > 0");
  FracPoly f = *this;
  for (const auto& [e, c] : terms_) f.add(e + k, -c);
  return f;
}

FracPoly FracPoly::divided_by_one_minus(long k) const {
  if (k <= 0) throw Error(ErrorKind::kInvalidArgument, "divided_by_one_minus needs k > 0");
  if (terms_.empty()) return *this;
  // With q * (1 - t^k) = f, the coefficients satisfy q[i] = f[i] + q[i - k]
  // on the dense window [lo, hi - k]; the top k entries must then cancel.
  const long lo = terms_.begin()->first;
  const long hi = terms_.rbegin()->first;
  const long n = hi - lo + 1;
  if (n <= k) {
    throw Error(ErrorKind::kDivisionNotExact, to_string() + " by 1 - t^(k/w)");
  }
  std::vector<Rational> q(static_cast<std::size_t>(n - k));
  for (const auto& [e, c] : terms_) {
    if (e - lo < n - k) q[static_cast<std::size_t>(e - lo)] = c;
  }
  for (long i = k; i < n - k; ++i) q[i] += q[i - k];
  for (long i = n - k; i < n; ++i) {
    const Rational carried = i >= k ? q[static_cast<std::size_t>(i - k)] : Rational(0);
    if (coeff(lo + i) + carried != 0) {
      throw Error(ErrorKind::kDivisionNotExact, to_string() + " by 1 - t^(k/w)");
    }
  }
  FracPoly out(denominator_);
  for (long i = 0; i < n - k; ++i) out.add(lo + i, q[i]);
  return out;
}

FracPoly FracPoly::shifted(long e) const {
  FracPoly f(denominator_);
  for (const auto& [x, c] : terms_) f.terms_.emplace(x + e, c);
  return f;
}

Poly FracPoly::to_poly() const {
  std::vector<Rational> v;
  for (const auto& [e, c] : terms_) {
    if (Mod(e, denominator_) != 0 || e < 0) {
      throw Error(ErrorKind::kInvalidArgument,
                  "FracPoly is not an ordinary polynomial: " + to_string());
    }
    std::size_t i = static_cast<std::size_t>(e / denominator_);
    if (v.size() <= i) v.resize(i + 1);
    v[i] = c;
  }
  return Poly(std::move(v));
}

FracPoly& FracPoly::operator+=(const FracPoly& o) {
  if (o.denominator_ != denominator_) {
    long l = std::lcm(denominator_, o.denominator_);
    *this = rescaled(l / denominator_);
    return *this += o.rescaled(l / o.denominator_);
  }
  for (const auto& [e, c] : o.terms_) add(e, c);
  return *this;
}

FracPoly& FracPoly::operator-=(const FracPoly& o) { return *this += o * Rational(-1); }

FracPoly& FracPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, x] : terms_) x *= c;
  return *this;
}

std::string FracPoly::to_string(std::string_view var) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    Rational mag = abs(c);
    if (e == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << var << "^(" << MakeRational(e, denominator_).get_str() << ")";
  }
  return os.str();
}

void FracPoly::add(long e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

FracPoly operator+(FracPoly a, const FracPoly& b) { return a += b; }
FracPoly operator-(FracPoly a, const FracPoly& b) { return a -= b; }
FracPoly operator*(FracPoly a, const Rational& c) { return a *= c; }

FracPoly operator*(const FracPoly& a, const FracPoly& b) {
  if (a.denominator() != b.denominator()) {
    long l = std::lcm(a.denominator(), b.denominator());
    return a.rescaled(l / a.denominator()) * b.rescaled(l / b.denominator());
  }
  std::map<long, Rational> acc;
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) acc[ea + eb] += ca * cb;
  }
  return FracPoly(a.denominator(), std::move(acc));
}

bool operator==(const FracPoly& a, const FracPoly& b) {
  if (a.denominator() == b.denominator()) return a.terms() == b.terms();
  long l = std::lcm(a.denominator(), b.denominator());
  return a.rescaled(l / a.denominator()).terms() ==
         b.rescaled(l / b.denominator()).terms();
}

FracPoly IntegralProject(const FracPoly& f) {
  std::map<long, Rational> kept;
  for (const auto& [e, c] : f.terms()) {
    if (Mod(e, f.denominator()) == 0) kept.emplace(e, c);
  }
  return FracPoly(f.denominator(), std::move(kept));
}

bool ReynoldsFactorProperty(const FracPoly& p, const FracPoly& q) {
  if (!p.is_integral()) {
    throw Error(ErrorKind::kInvalidArgument, "Reynolds factor must be integral");
  }
  return IntegralProject(p * q) == p * IntegralProject(q);
}

}  // namespace wpcy
