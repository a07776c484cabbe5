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

#include <numeric>

#include "doctest.h"
#include "oracles.hpp"
#include "wpcy/errors.hpp"
#include "wpcy/face_epoly.hpp"

using namespace wpcy;

TEST_CASE("face E-polynomials") {
  const auto k3 = WeightVector::Validate({1, 5, 12, 18});
  CHECK(FaceE(k3, k3.all()).value.to_string() == "8 + 9*u + 9*v + u^2 + 7*u*v + v^2 + (u*v)^2");
  // An edge with trivial subgroup.
  CHECK(FaceE(k3, IndexSet::Of({2, 3})).value == BiPoly(1));
  // The edge {0, 1} has G_J of order 6: six points.
  CHECK(Subgroup(k3, IndexSet::Of({0, 1})).members.size() == 6);
  CHECK(FaceE(k3, IndexSet::Of({0, 1})).value == BiPoly(6));
  // The 2-faces.
  CHECK(FaceE(k3, IndexSet::Of({0, 2, 3})).value.to_string() == "-2 + u*v");
  CHECK(FaceE(k3, IndexSet::Of({0, 1, 3})).value.to_string() == "-7 - 3*u - 3*v + u*v");
  CHECK_THROWS_AS(FaceE(k3, IndexSet::Of({1})), Error);
  try {
    FaceE(k3, IndexSet::Of({1}));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kSubsetTooSmall);
  }
}

TEST_CASE("psi counts ages") {
  CHECK(Psi(WeightVector::Validate({1, 1, 1, 1, 1})) == std::vector<long>{1, 1, 1, 1, 1});
  const auto k3 = Psi(WeightVector::Validate({1, 5, 12, 18}));
  CHECK(k3 == std::vector<long>{1, 15, 19, 1});
  CHECK(std::accumulate(k3.begin(), k3.end(), 0L) == 36);
}

TEST_CASE("face polynomials have integer coefficients and agree with psi at v = 1") {
  for (const auto& ws : oracle::SortedVectors(4, 24)) {
    const auto wv = WeightVector::Validate(ws);
    const long d = wv.dim();
    const auto face = FaceE(wv, wv.all()).value;
    CHECK(face.has_integer_coefficients());
    CHECK(IsInteger(face(1, 1)));
    // At v = 1 the twisted sum only sees ages: E(u, 1) equals
    // ((u-1)^d - (-1)^d)/u + (-1)^{d+1}/u * sum_{i >= 1} psi_i u^i.
    const auto psi = Psi(wv);
    for (long x = 2; x <= 4; ++x) {
      Rational u = x;
      Rational expected = 0;
      Rational power = 1;
      for (long i = 0; i < d; ++i) power *= u - 1;
      expected = (power - (d % 2 == 0 ? 1 : -1)) / u;
      Rational twisted = 0;
      Rational ui = 1;
      for (std::size_t i = 1; i < psi.size(); ++i) {
        ui *= u;
        twisted += psi[i] * ui;
      }
      expected += ((d + 1) % 2 == 0 ? 1 : -1) * twisted / u;
      CHECK(face(u, 1) == expected);
    }
  }
}
