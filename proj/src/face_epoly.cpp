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

#include "wpcy/face_epoly.hpp"

#include "wpcy/errors.hpp"

namespace wpcy {

FaceEPolynomial FaceE(const WeightVector& wv, IndexSet J) {
  const long n = static_cast<long>(J.count());
  if (n < 2) {
    throw Error(ErrorKind::kSubsetTooSmall,
                "face " + J.to_string() + " needs at least two indices");
  }
  // (t-1)^{n-1} minus its constant term, divided by t.
  Poly head = Poly{-1, 1}.pow(static_cast<unsigned>(n - 1));
  head -= Poly(n % 2 == 0 ? -1L : 1L);
  head = ExactDiv(head, Poly{0, 1});

  BiPoly twisted;
  for (long l : Subgroup(wv, J).members) {
    if (l == 0) continue;
    const auto& e = wv.elements()[static_cast<std::size_t>(l)];
    twisted += BiPoly::Monomial(1, e.age, e.size - e.age);
  }
  if (n % 2 == 1) twisted = -twisted;
  return {J, BiPoly::InUV(head) + twisted.divided_by_uv()};
}

std::vector<long> Psi(const WeightVector& wv) {
  std::vector<long> psi(wv.size(), 0);
  for (const auto& e : wv.elements()) ++psi[static_cast<std::size_t>(e.age)];
  return psi;
}

}  // namespace wpcy
