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

#include "wpcy/rational_t.hpp"

#include <algorithm>
#include <cstdlib>
#include <iterator>
#include <string>

#include "wpcy/errors.hpp"

namespace wpcy {

namespace {

std::vector<std::size_t> Divisors(std::size_t m) {
  std::vector<std::size_t> out;
  for (std::size_t d = 1; d <= m; ++d) {
    if (m % d == 0) out.push_back(d);
  }
  return out;
}

Poly CyclotomicProduct(const std::map<std::size_t, int>& den) {
  Poly p(1);
  for (const auto& [k, e] : den) p *= Poly::Cyclotomic(k).pow(static_cast<unsigned>(e));
  return p;
}

}  // namespace

RationalT::RationalT(const Rational& c) : num_(c) {}

RationalT::RationalT(const Poly& p) : num_(p) { canonicalize(); }

RationalT RationalT::FromFactored(Poly numerator, std::span<const OneMinusFactor> denominator,
                                  long shift) {
  RationalT r;
  r.num_ = std::move(numerator);
  r.shift_ = shift;
  int sign_flips = 0;
  for (const auto& f : denominator) {
    if (f.m <= 0 || f.e < 0) {
      throw Error(ErrorKind::kInvalidArgument, "denominator factor (1 - t^m)^e needs m > 0, e >= 0");
    }
    // 1 - t^m = -prod_{k | m} Phi_k(t).
    for (std::size_t k : Divisors(static_cast<std::size_t>(f.m))) r.den_[k] += f.e;
    sign_flips += f.e;
  }
  if (sign_flips % 2 != 0) r.num_ *= Rational(-1);
  r.canonicalize();
  return r;
}

RationalT RationalT::Monomial(const Rational& c, long k) {
  RationalT r(c);
  if (!r.is_zero()) r.shift_ = k;
  return r;
}

bool RationalT::is_polynomial() const { return den_.empty() && (shift_ >= 0 || is_zero()); }

Poly RationalT::to_poly() const {
  if (!is_polynomial()) throw Error(ErrorKind::kNotPolynomial, to_string());
  return num_.shifted(static_cast<std::size_t>(std::max(shift_, 0L)));
}

Poly RationalT::expanded_numerator() const {
  return num_.shifted(static_cast<std::size_t>(std::max(shift_, 0L)));
}

Poly RationalT::expanded_denominator() const {
  return CyclotomicProduct(den_).shifted(static_cast<std::size_t>(std::max(-shift_, 0L)));
}

int RationalT::pole_order_at_one() const {
  auto it = den_.find(1);
  return it == den_.end() ? 0 : it->second;
}

Rational RationalT::operator()(const Rational& x) const {
  Rational d = expanded_denominator()(x);
  if (d == 0) throw Error(ErrorKind::kInvalidArgument, "evaluation at a pole");
  return expanded_numerator()(x) / d;
}

RationalT RationalT::inverted() const {
  if (is_zero()) return {};
  // N(1/t) = t^{-deg N} rev(N); Phi_k(1/t) = t^{-phi(k)} Phi_k(t) for k >= 2
  // and Phi_1(1/t) = -t^{-1} Phi_1(t).
  RationalT r;
  r.num_ = num_.reversed(static_cast<std::size_t>(num_.degree()));
  r.den_ = den_;
  long s = -shift_ - num_.degree();
  for (const auto& [k, e] : den_) s += static_cast<long>(e) * Poly::Cyclotomic(k).degree();
  r.shift_ = s;
  if (pole_order_at_one() % 2 != 0) r.num_ *= Rational(-1);
  r.canonicalize();
  return r;
}

RationalT RationalT::shifted(long k) const {
  RationalT r = *this;
  if (!r.is_zero()) r.shift_ += k;
  return r;
}

std::vector<Rational> RationalT::series(std::size_t order) const {
  if (shift_ < 0 && !is_zero()) {
    throw Error(ErrorKind::kInvalidArgument, "series at 0 of a function with a pole at 0");
  }
  std::vector<Rational> out(order + 1);
  if (is_zero()) return out;
  Poly den = CyclotomicProduct(den_);
  Poly num = expanded_numerator();
  const Rational inv0 = 1 / den.coeff(0);
  const auto& dc = den.coefficients();
  for (std::size_t n = 0; n <= order; ++n) {
    Rational acc = num.coeff(n);
    for (std::size_t j = 1; j < dc.size() && j <= n; ++j) acc -= dc[j] * out[n - j];
    out[n] = acc * inv0;
  }
  return out;
}

RationalT& RationalT::operator+=(const RationalT& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  std::map<std::size_t, int> den = den_;
  for (const auto& [k, e] : o.den_) den[k] = std::max(den[k], e);
  auto lift = [&den](const RationalT& x, long s) {
    Poly p = x.num_.shifted(static_cast<std::size_t>(x.shift_ - s));
    for (const auto& [k, e] : den) {
      auto it = x.den_.find(k);
      int have = it == x.den_.end() ? 0 : it->second;
      if (e > have) p *= Poly::Cyclotomic(k).pow(static_cast<unsigned>(e - have));
    }
    return p;
  };
  long s = std::min(shift_, o.shift_);
  num_ = lift(*this, s) + lift(o, s);
  den_ = std::move(den);
  shift_ = s;
  canonicalize();
  return *this;
}

RationalT& RationalT::operator-=(const RationalT& o) { return *this += -o; }

RationalT& RationalT::operator*=(const RationalT& o) {
  if (is_zero() || o.is_zero()) return *this = RationalT();
  num_ *= o.num_;
  for (const auto& [k, e] : o.den_) den_[k] += e;
  shift_ += o.shift_;
  canonicalize();
  return *this;
}

std::string RationalT::to_string(std::string_view var) const {
  std::string n = expanded_numerator().to_string(var);
  if (is_polynomial()) return n;
  return "(" + n + ")/(" + expanded_denominator().to_string(var) + ")";
}

void RationalT::canonicalize() {
  if (num_.is_zero()) {
    den_.clear();
    shift_ = 0;
    return;
  }
  std::size_t low = num_.low_order();
  if (low > 0) {
    std::vector<Rational> c(num_.coefficients().begin() + static_cast<long>(low),
                            num_.coefficients().end());
    num_ = Poly(std::move(c));
    shift_ += static_cast<long>(low);
  }
  for (auto it = den_.begin(); it != den_.end();) {
    const Poly& phi = Poly::Cyclotomic(it->first);
    while (it->second > 0 && num_.degree() >= phi.degree()) {
      auto [q, r] = DivMod(num_, phi);
      if (!r.is_zero()) break;
      num_ = std::move(q);
      --it->second;
    }
    it = it->second == 0 ? den_.erase(it) : std::next(it);
  }
}

RationalT operator+(RationalT a, const RationalT& b) { return a += b; }
RationalT operator-(RationalT a, const RationalT& b) { return a -= b; }
RationalT operator-(RationalT a) { return a *= RationalT(-1); }
RationalT operator*(RationalT a, const RationalT& b) { return a *= b; }

bool CrossEqual(const RationalT& a, const RationalT& b) {
  return a.expanded_numerator() * b.expanded_denominator() ==
         b.expanded_numerator() * a.expanded_denominator();
}

Rational LimitAtOne(const RationalT& r) {
  if (r.pole_order_at_one() > 0) {
    throw Error(ErrorKind::kPoleAtOne, r.to_string());
  }
  return r(Rational(1));
}

std::optional<long> GuardBandFromEnv() {
  const char* v = std::getenv("MIRROR_STRINGY_GUARD");
  if (v == nullptr || *v == '\0') return std::nullopt;
  char* end = nullptr;
  long g = std::strtol(v, &end, 10);
  if (end == v || *end != '\0' || g < 0) return std::nullopt;
  return g;
}

RationalT RationalFromCounts(std::span<const Integer> counts,
                             std::span<const OneMinusFactor> denominator,
                             std::optional<long> guard) {
  long degree = 0;
  Poly den(1);
  for (const auto& f : denominator) {
    if (f.m <= 0 || f.e < 0) {
      throw Error(ErrorKind::kInvalidArgument, "denominator factor (1 - t^m)^e needs m > 0, e >= 0");
    }
    degree += f.m * f.e;
    den *= Poly::OneMinusPower(static_cast<std::size_t>(f.m)).pow(static_cast<unsigned>(f.e));
  }
  const long order = static_cast<long>(counts.size());
  const long need = guard.value_or(degree);
  if (order < degree + need) {
    throw Error(ErrorKind::kInvalidArgument,
                "need at least " + std::to_string(degree + need) + " terms, got " +
                    std::to_string(order));
  }
  // Product of the truncated series with the denominator, degrees 0..order.
  std::vector<Rational> prod(static_cast<std::size_t>(order) + 1);
  const auto& dc = den.coefficients();
  for (long k = 1; k <= order; ++k) {
    const Integer& n = counts[static_cast<std::size_t>(k - 1)];
    if (n == 0) continue;
    for (std::size_t j = 0; j < dc.size() && k + static_cast<long>(j) <= order; ++j) {
      prod[static_cast<std::size_t>(k) + j] += dc[j] * n;
    }
  }
  for (long k = degree + 1; k <= order; ++k) {
    if (prod[static_cast<std::size_t>(k)] != 0) {
      throw Error(ErrorKind::kReconstructionFailure,
                  "nonzero residual at degree " + std::to_string(k) +
                      " beyond the certified numerator degree " + std::to_string(degree));
    }
  }
  prod.resize(static_cast<std::size_t>(std::min(order, degree)) + 1);
  return RationalT::FromFactored(Poly(std::move(prod)), denominator);
}

}  // namespace wpcy
