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

#include <random>
#include <vector>

#include "doctest.h"
#include "random_values.hpp"
#include "wpcy/bipoly.hpp"
#include "wpcy/errors.hpp"
#include "wpcy/frac_poly.hpp"
#include "wpcy/poly.hpp"
#include "wpcy/rational_t.hpp"

using namespace wpcy;

namespace {

ErrorKind KindOf(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::kInvalidArgument;
}

std::vector<Integer> Counts(long K, const std::function<long(long)>& n) {
  std::vector<Integer> c;
  for (long k = 1; k <= K; ++k) c.emplace_back(n(k));
  return c;
}

}  // namespace

TEST_CASE("poly arithmetic and division") {
  const Poly a{1, 2, 1};
  const Poly b{1, 1};
  CHECK(a == b * b);
  CHECK(ExactDiv(a, b) == b);
  CHECK(KindOf([&] { ExactDiv(a, Poly{0, 1}); }) == ErrorKind::kDivisionNotExact);
  CHECK(Gcd(a, Poly{-1, 0, 1}) == b);
  CHECK(Poly::OneMinusPower(3) == Poly{1, 0, 0, -1});
  CHECK(Poly::Cyclotomic(6) == Poly{1, -1, 1});
  CHECK(Poly::Cyclotomic(1) == Poly{-1, 1});
  CHECK(Poly{1, 0, 7}.to_string() == "1 + 7*t^2");
  CHECK(Poly().degree() == -1);
}

TEST_CASE("cyclotomic factors multiply back to t^n - 1") {
  for (std::size_t n = 1; n <= 30; ++n) {
    Poly prod(1);
    for (std::size_t k = 1; k <= n; ++k) {
      if (n % k == 0) prod *= Poly::Cyclotomic(k);
    }
    CHECK(prod == -Poly::OneMinusPower(n));
  }
}

TEST_CASE("integral projector") {
  SUBCASE("an integral value is unchanged") {
    const FracPoly f = FracPoly::FromPoly(Poly{3, 0, -2}, 7);
    CHECK(IntegralProject(f) == f);
  }
  SUBCASE("all exponents fractional") {
    // (uv)^{5/6} (1 + (uv)^{1/3}) with w = 6.
    const FracPoly f = FracPoly::Monomial(6, 1, 5) * FracPoly(6, {{0, 1}, {2, 1}});
    CHECK(IntegralProject(f).is_zero());
  }
  SUBCASE("fifth power of a geometric sum in t^(1/5)") {
    const FracPoly s(5, {{0, 1}, {1, 1}, {2, 1}, {3, 1}});
    FracPoly p = FracPoly::Monomial(5, 1, 0);
    for (int i = 0; i < 5; ++i) p = p * s;
    CHECK(IntegralProject(p).to_poly() == Poly{1, 101, 101, 1});
  }
  SUBCASE("mixed denominators are compared after rescaling") {
    CHECK(FracPoly::Monomial(2, 1, 1) == FracPoly::Monomial(4, 1, 2));
    const FracPoly sum = FracPoly::Monomial(2, 1, 1) + FracPoly::Monomial(3, 1, 1);
    CHECK(sum.denominator() == 6);
    CHECK(IntegralProject(sum).is_zero());
  }
}

TEST_CASE("projector idempotence, linearity and the factor property") {
  std::mt19937 rng(7);
  for (int i = 0; i < 50; ++i) {
    const FracPoly q = testgen::RandomFracPoly(rng, 12, 24, 8);
    const FracPoly r = testgen::RandomFracPoly(rng, 12, 24, 8);
    const Rational c = testgen::SmallRational(rng);
    CHECK(IntegralProject(IntegralProject(q)) == IntegralProject(q));
    CHECK(IntegralProject(q * c + r) == IntegralProject(q) * c + IntegralProject(r));
    const FracPoly p = FracPoly::FromPoly(testgen::RandomPoly(rng, 3), 12);
    CHECK(ReynoldsFactorProperty(p, q));
  }
  CHECK(ReynoldsFactorProperty(FracPoly::Monomial(1, 1, 0), FracPoly::Monomial(2, 1, 1)));
  CHECK(ReynoldsFactorProperty(FracPoly(1, {{0, 1}, {1, 1}}), FracPoly::Monomial(2, 1, 1)));
}

TEST_CASE("exact division by 1 - t^(k/w)") {
  const FracPoly f = FracPoly(4, {{1, 1}, {3, 1}, {5, 1}});
  const FracPoly g = f.times_one_minus(2);
  CHECK(g.divided_by_one_minus(2) == f);
  CHECK(KindOf([&] { f.divided_by_one_minus(3); }) == ErrorKind::kDivisionNotExact);
}

TEST_CASE("rational reconstruction from counts") {
  const std::vector<OneMinusFactor> five{{5, 1}};
  SUBCASE("multiples of five") {
    const auto counts = Counts(12, [](long k) { return k % 5 == 0 ? 1 : 0; });
    const RationalT r = RationalFromCounts(counts, five);
    CHECK(r == RationalT::FromFactored(Poly::Monomial(1, 5), five));
    CHECK(r.series(12)[10] == 1);
  }
  SUBCASE("zero series") {
    const auto counts = Counts(12, [](long) { return 0; });
    CHECK(RationalFromCounts(counts, five).is_zero());
  }
  SUBCASE("N(k) = k") {
    const std::vector<OneMinusFactor> sq{{1, 2}};
    const auto counts = Counts(6, [](long k) { return k; });
    const RationalT r = RationalFromCounts(counts, sq);
    CHECK(r == RationalT::FromFactored(Poly{0, 1}, sq));
    const auto s = r.series(6);
    for (long k = 1; k <= 6; ++k) CHECK(s[static_cast<std::size_t>(k)] == k);
  }
  SUBCASE("a wrong denominator is caught by the guard band") {
    const auto counts = Counts(20, [](long k) { return k * k; });
    CHECK(KindOf([&] { RationalFromCounts(counts, std::vector<OneMinusFactor>{{1, 2}}); }) ==
          ErrorKind::kReconstructionFailure);
  }
  SUBCASE("too few terms for the guard band") {
    const auto counts = Counts(9, [](long k) { return k % 5 == 0 ? 1 : 0; });
    CHECK(KindOf([&] { RationalFromCounts(counts, five); }) == ErrorKind::kInvalidArgument);
    CHECK_NOTHROW(RationalFromCounts(counts, five, 4));
  }
}

TEST_CASE("limits at t = 1") {
  CHECK(LimitAtOne(RationalT::FromFactored(Poly::OneMinusPower(3),
                                           std::vector<OneMinusFactor>{{1, 1}})) == 3);
  const RationalT one_fifth =
      RationalT::FromFactored(Poly{-1, 1}, std::vector<OneMinusFactor>{{5, 1}});
  CHECK(LimitAtOne(-one_fifth) == MakeRational(1, 5));
  const RationalT two_fifths = -one_fifth * RationalT(Poly{1, 0, 0, 1});
  CHECK(LimitAtOne(two_fifths) == MakeRational(2, 5));
  CHECK(KindOf([] {
          LimitAtOne(RationalT::FromFactored(Poly(1), std::vector<OneMinusFactor>{{2, 1}}));
        }) == ErrorKind::kPoleAtOne);
}

TEST_CASE("canonical form agrees with cross multiplication") {
  std::mt19937 rng(11);
  for (int i = 0; i < 100; ++i) {
    const RationalT a = testgen::RandomRationalT(rng);
    const RationalT b = testgen::RandomRationalT(rng);
    CHECK((a == b) == CrossEqual(a, b));
    CHECK(CrossEqual(a + b, b + a));
    CHECK((a + b) - b == a);
    CHECK(a * b == b * a);
    CHECK(a.inverted().inverted() == a);
    // Reduced: numerator and denominator are coprime.
    CHECK(Gcd(a.expanded_numerator(), a.expanded_denominator()).degree() <= 0);
    const Rational x = MakeRational(2, 3);
    CHECK(a(x) * a.expanded_denominator()(x) == a.expanded_numerator()(x));
  }
}

TEST_CASE("inversion t -> 1/t") {
  const RationalT r = RationalT::FromFactored(Poly(1), std::vector<OneMinusFactor>{{1, 1}});
  const RationalT expected =
      RationalT::FromFactored(Poly{0, -1}, std::vector<OneMinusFactor>{{1, 1}});
  CHECK(r.inverted() == expected);
  CHECK(RationalT(Poly{0, 0, 3}).inverted() == RationalT::Monomial(3, -2));
}

TEST_CASE("bipoly rendering and division") {
  BiPoly k3 = BiPoly::Monomial(1, 0, 0) + BiPoly::Monomial(1, 2, 0) + BiPoly::Monomial(20, 1, 1) +
              BiPoly::Monomial(1, 0, 2) + BiPoly::Monomial(1, 2, 2);
  CHECK(k3.to_string() == "1 + u^2 + 20*u*v + v^2 + (u*v)^2");
  CHECK((-k3).to_string() == "-1 - u^2 - 20*u*v - v^2 - (u*v)^2");
  CHECK(BiPoly::Monomial(-2, 2, 1).to_string() == "-2*u^2*v");
  CHECK(KindOf([&] { k3.divided_by_uv(); }) == ErrorKind::kDivisionNotExact);
  CHECK(BiPoly::Monomial(3, 2, 1).divided_by_uv() == BiPoly::Monomial(3, 1, 0));
  CHECK(k3(1, 1) == 24);
}

TEST_CASE("mirror transform") {
  CHECK(MirrorTransform(BiPoly(1), 0) == BiPoly(1));
  const BiPoly uv = BiPoly::Monomial(1, 1, 1);
  CHECK(MirrorTransform(uv, 2) == uv);
  CHECK(KindOf([&] { MirrorTransform(BiPoly::Monomial(1, 3, 0), 2); }) ==
        ErrorKind::kNegativeExponent);
  std::mt19937 rng(3);
  for (long dim = 0; dim <= 4; ++dim) {
    BiPoly p;
    for (int i = 0; i < 6; ++i) {
      p += BiPoly::Monomial(testgen::SmallRational(rng), static_cast<long>(rng() % (dim + 1)),
                            static_cast<long>(rng() % 4));
    }
    CHECK(MirrorTransform(MirrorTransform(p, dim), dim) == p);
  }
}
