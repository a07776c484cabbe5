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

#ifndef WPCY_FACE_EPOLY_HPP_
#define WPCY_FACE_EPOLY_HPP_

#include <vector>

#include "wpcy/bipoly.hpp"
#include "wpcy/weights.hpp"

namespace wpcy {

struct FaceEPolynomial {
  IndexSet J;
  BiPoly value;
};

/// E-polynomial of the non-degenerate affine hypersurface attached to the
/// face indexed by J (|J| >= 2, else kSubsetTooSmall):
///
///   ((uv-1)^{|J|-1} - (-1)^{|J|-1}) / uv
///     + (-1)^{|J|} / uv * sum_{0 != l in G_J} u^age(l) v^{size(l)-age(l)}.
FaceEPolynomial FaceE(const WeightVector& wv, IndexSet J);

/// psi[i] = #{l in Z/wZ : age(l) = i}, i = 0..d.
std::vector<long> Psi(const WeightVector& wv);

}  // namespace wpcy

#endif  // WPCY_FACE_EPOLY_HPP_
