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

// Acceptance run: one PASS/FAIL line per criterion with its wall time.
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "random_values.hpp"
#include "wpcy/bipoly.hpp"
#include "wpcy/errors.hpp"
#include "wpcy/face_epoly.hpp"
#include "wpcy/frac_poly.hpp"
#include "wpcy/mirror_verify.hpp"
#include "wpcy/orbifold.hpp"
#include "wpcy/stringy.hpp"

using namespace wpcy;

namespace {

// Collects failed conditions so a criterion reports all of them.
struct Checker {
  std::vector<std::string> failures;
  void operator()(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

BiPoly Parse(std::initializer_list<std::tuple<long, long, long>> terms) {
  BiPoly p;
  for (const auto& [c, a, b] : terms) p += BiPoly::Monomial(c, a, b);
  return p;
}

void Quintic(Checker& check) {
  const auto wv = WeightVector::Validate({1, 1, 1, 1, 1});
  const BiPoly expected = Parse({{1, 0, 0}, {101, 1, 1}, {101, 2, 2}, {1, 3, 3},
                                 {1, 3, 0}, {1, 2, 1}, {1, 1, 2}, {1, 0, 3}});
  const BiPoly poincare = VafaPoincare(wv);
  check(poincare == expected, "vafa_poincare = " + poincare.to_string());
  const HodgeTable h = ExtractHodge(SignTwist(poincare), 3);
  check(h.at(1, 1) == 101, "mirror h11");
  check(h.at(2, 1) == 1, "mirror h21");
  check(VafaEuler(wv) == -200, "vafa_euler");
}

void K3(Checker& check) {
  const auto wv = WeightVector::Validate({1, 5, 12, 18});
  const BiPoly expected = Parse({{1, 0, 0}, {1, 2, 0}, {20, 1, 1}, {1, 0, 2}, {1, 2, 2}});
  const EFunction e = StringyE(wv);
  check(e == EFunction::FromBiPoly(expected), "stringy_e = " + e.to_string());

  // Terms whose bracket carries the weight-5 denominator: J omits index 1.
  EFunction subtotal;
  for (const auto& term : StringyTerms(wv)) {
    if (!term.J.contains(1)) subtotal += term.value;
  }
  check(subtotal == EFunction::FromBiPoly(Parse({{1, 0, 0}, {7, 1, 1}})),
        "(uv)^5 - 1 subtotal = " + subtotal.to_string());
  check(StringyEuler(wv) == 24, "stringy_euler");

  const BiPoly face = Parse({{1, 2, 2}, {1, 2, 0}, {7, 1, 1}, {1, 0, 2}, {9, 1, 0}, {9, 0, 1}, {8, 0, 0}});
  check(FaceE(wv, wv.all()).value == face, "face E at J = I");
  check(MirrorOrbifoldE(wv).value == EFunction::FromBiPoly(expected), "mirror_orbifold_e");
  const auto r = Verify(wv);
  check(r.global_identity, "global identity");
  check(r.per_l_failures.empty(), "per-l identity");
  check(r.status() == "pass", "verify status");
}

void Octic(Checker& check) {
  const auto wv = WeightVector::Validate({1, 1, 2, 2, 2});
  const BiPoly expected = Parse({{1, 0, 0}, {86, 1, 1}, {-1, 0, 3}, {-2, 1, 2}, {-2, 2, 1},
                                 {-1, 3, 0}, {86, 2, 2}, {1, 3, 3}});
  const auto orb = MirrorOrbifoldE(wv);
  check(orb.value == EFunction::FromBiPoly(expected), "mirror_orbifold_e = " + orb.value.to_string());
  check(orb.per_l[0] == EFunction::FromBiPoly(Parse({{1, 0, 0}, {83, 1, 1}, {83, 2, 2}, {1, 3, 3}})),
        "untwisted term = " + orb.per_l[0].to_string());
  check(orb.per_l[4] == EFunction::FromBiPoly(Parse({{3, 1, 1}, {3, 2, 2}})),
        "l = 4 term = " + orb.per_l[4].to_string());
  check(VafaEuler(wv) == -168, "euler");
  check(Verify(wv).status() == "pass", "verify");
}

void NoMirror(Checker& check) {
  const auto wv = WeightVector::Validate({1, 1, 2, 4, 5});
  check(wv.ip(), "ip");
  check(!wv.transverse(), "transverse");
  check(!IsPolynomial(StringyE(wv)), "stringy_e non-polynomial");
  const auto pieces = StringyEPerL(wv);
  check(pieces[0].value_at_one() == MakeRational(1092, 5), "untwisted limit");
  EFunction twisted;
  int nonzero = 0;
  bool all_size_five = true;
  for (long l = 1; l < wv.degree(); ++l) {
    const auto g = Element(wv, l);
    if (g.size != 5) {
      all_size_five = false;
      continue;
    }
    ++nonzero;
    twisted += pieces[static_cast<std::size_t>(l)];
  }
  check(all_size_five && nonzero == 12, "twelve nonzero elements of size 5");
  check(twisted == EFunction::FromBiPoly(Parse({{-1, 0, 3}, {-5, 1, 2}, {-5, 2, 1}, {-1, 3, 0}})),
        "twisted sum = " + twisted.to_string());
}

void BracketOracle(Checker& check) {
  for (const auto& wv : oracle::Population()) {
    const auto brute = oracle::LatticeCounts(wv.weights(), 20);
    for (std::uint32_t bits = 0; bits < (1U << wv.size()); ++bits) {
      const auto series = Bracket(wv, IndexSet(bits)).inverted().series(20);
      for (std::size_t k = 0; k <= 20; ++k) {
        if (series[k] != Rational(brute[bits][k])) {
          check(false, wv.to_string() + " J=" + IndexSet(bits).to_string() + " k=" + std::to_string(k));
          break;
        }
      }
    }
  }
}

void PerL(Checker& check) {
  for (const auto& wv : oracle::Population()) {
    const auto r = Verify(wv);
    check(r.global_identity && r.per_l_failures.empty(), wv.to_string() + " per-l");
    if (!wv.transverse()) continue;
    check(r.stringy_polynomial, wv.to_string() + " polynomial");
    check(r.hodge_mirror && r.hodge_mirror->symmetric() && r.hodge_mirror->poincare_dual(),
          wv.to_string() + " hodge symmetry");
  }
}

void CrossEuler(Checker& check) {
  for (const auto& wv : oracle::Population()) {
    if (!wv.transverse()) continue;
    const Rational sign = (wv.dim() - 1) % 2 == 0 ? 1 : -1;
    check(StringyEuler(wv) == sign * VafaEuler(wv), wv.to_string());
  }
}

void Kernel(Checker& check) {
  std::mt19937 rng(20261016);
  for (int i = 0; i < 200; ++i) {
    const long w = std::uniform_int_distribution<long>(1, 40)(rng);
    const FracPoly q = testgen::RandomFracPoly(rng, w, 3 * w, 8);
    const FracPoly r = testgen::RandomFracPoly(rng, w, 3 * w, 8);
    const Rational c = testgen::SmallRational(rng);
    check(IntegralProject(IntegralProject(q)) == IntegralProject(q), "idempotence");
    check(IntegralProject(q * c + r) == IntegralProject(q) * c + IntegralProject(r), "linearity");
    check(ReynoldsFactorProperty(FracPoly::FromPoly(testgen::RandomPoly(rng, 4), w), q), "factor property");
  }
  for (int i = 0; i < 200; ++i) {
    const RationalT a = testgen::RandomRationalT(rng);
    const RationalT b = testgen::RandomRationalT(rng);
    check((a == b) == CrossEqual(a, b), "canonical equality");
    check((a + b) - b == a, "canonical round trip");
    check(a == a * RationalT(1) && CrossEqual(a, a), "reflexive");
  }
}

struct Criterion {
  int number;
  double limit_seconds;
  std::function<void(Checker&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, 1, Quintic},        {2, 1, K3},         {3, 1, Octic},       {4, 1, NoMirror},
      {5, 60, BracketOracle}, {6, 120, PerL},      {7, 60, CrossEuler}, {8, 10, Kernel},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Checker check;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(check);
    } catch (const std::exception& e) {
      check(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs >= c.limit_seconds) check(false, "over the time limit");
    const bool ok = check.failures.empty();
    if (!ok) ++failed;
    std::printf("criterion %d: %s (%.3f s)\n", c.number, ok ? "PASS" : "FAIL", secs);
    for (std::size_t i = 0; i < check.failures.size() && i < 10; ++i) {
      std::printf("  %s\n", check.failures[i].c_str());
    }
  }
  return failed == 0 ? 0 : 1;
}
