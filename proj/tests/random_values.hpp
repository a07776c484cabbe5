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

// Seeded random generators for kernel property tests.

#ifndef WPCY_TESTS_RANDOM_VALUES_HPP_
#define WPCY_TESTS_RANDOM_VALUES_HPP_

#include <random>
#include <vector>

#include "wpcy/frac_poly.hpp"
#include "wpcy/rational_t.hpp"

namespace testgen {

inline wpcy::Rational SmallRational(std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 4);
  return wpcy::MakeRational(num(rng), den(rng));
}

// Up to `terms` monomials with exponents in [0, max_exp] over denominator w.
inline wpcy::FracPoly RandomFracPoly(std::mt19937& rng, long w, long max_exp, int terms) {
  std::uniform_int_distribution<long> exp(0, max_exp);
  wpcy::FracPoly f(w);
  for (int i = 0; i < terms; ++i) f += wpcy::FracPoly::Monomial(w, SmallRational(rng), exp(rng));
  return f;
}

inline wpcy::Poly RandomPoly(std::mt19937& rng, int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::vector<wpcy::Rational> c(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto& x : c) x = SmallRational(rng);
  return wpcy::Poly(std::move(c));
}

// A random numerator over a random product of (1 - t^m)^e, times t^k.
inline wpcy::RationalT RandomRationalT(std::mt19937& rng) {
  std::uniform_int_distribution<int> nf(0, 3);
  std::uniform_int_distribution<long> m(1, 6);
  std::uniform_int_distribution<int> e(1, 2);
  std::uniform_int_distribution<long> shift(-3, 3);
  std::vector<wpcy::OneMinusFactor> den;
  for (int i = nf(rng); i > 0; --i) den.push_back({m(rng), e(rng)});
  // Multiply in a shared factor now and then so that cancellation happens.
  wpcy::Poly num = RandomPoly(rng, 6);
  if (!den.empty() && std::uniform_int_distribution<int>(0, 1)(rng) == 1) {
    num *= wpcy::Poly::OneMinusPower(static_cast<std::size_t>(den.front().m));
  }
  return wpcy::RationalT::FromFactored(num, den, shift(rng));
}

}  // namespace testgen

#endif  // WPCY_TESTS_RANDOM_VALUES_HPP_
