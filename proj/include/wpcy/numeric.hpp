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

#ifndef WPCY_NUMERIC_HPP_
#define WPCY_NUMERIC_HPP_

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace wpcy {

using Integer = mpz_class;
using Rational = mpq_class;

// "p/q" for proper fractions, "p" for integers.
inline std::string ToString(const Rational& r) { return r.get_str(); }
inline std::string ToString(const Integer& z) { return z.get_str(); }

inline bool IsInteger(const Rational& r) { return r.get_den() == 1; }

inline Rational MakeRational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Floor modulus; the result is in [0, m) for m > 0.
inline long Mod(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace wpcy

#endif  // WPCY_NUMERIC_HPP_
