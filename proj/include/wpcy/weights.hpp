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

#ifndef WPCY_WEIGHTS_HPP_
#define WPCY_WEIGHTS_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "wpcy/numeric.hpp"
#include "wpcy/rational_t.hpp"

namespace wpcy {

/// Subset of the coordinate indices {0..d}, stored as a bit mask.
class IndexSet {
 public:
  constexpr IndexSet() = default;
  constexpr explicit IndexSet(std::uint32_t bits) : bits_(bits) {}
  static IndexSet Full(std::size_t n) { return IndexSet((std::uint32_t{1} << n) - 1); }
  static IndexSet Of(std::initializer_list<std::size_t> indices) {
    IndexSet s;
    for (auto i : indices) s.bits_ |= std::uint32_t{1} << i;
    return s;
  }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool contains(std::size_t i) const { return (bits_ >> i) & 1U; }
  std::size_t count() const { return static_cast<std::size_t>(__builtin_popcount(bits_)); }
  constexpr bool includes(IndexSet o) const { return (o.bits_ & ~bits_) == 0; }
  /// Complement inside {0..n-1}.
  IndexSet complement(std::size_t n) const { return IndexSet(~bits_ & Full(n).bits_); }

  friend constexpr bool operator==(IndexSet, IndexSet) = default;
  friend constexpr auto operator<=>(IndexSet, IndexSet) = default;

  std::string to_string() const;

 private:
  std::uint32_t bits_ = 0;
};

/// Data of l in Z/wZ acting diagonally on C^{d+1} with weights l*w_i/w.
struct OrbifoldElement {
  long l = 0;
  std::vector<long> residues;  // l*w_i mod w, so theta_i = residues[i] / w
  std::vector<Rational> theta;
  long age = 0;
  long size = 0;
  IndexSet support;  // indices with theta_i != 0
};

struct FaceSubgroup {
  IndexSet J;
  std::vector<long> members;  // ascending
};

/// Count of group elements per (size, age).
using Census = std::map<std::pair<long, long>, long>;

/// A validated, well-formed weight vector (w_0..w_d). All orbifold data
/// are computed once at construction.
class WeightVector {
 public:
  /// Throws kEmptyInput, kInvalidArgument (fewer than two weights,
  /// non-positive weights, degree too large) or kNotWellFormed.
  static WeightVector Validate(std::vector<long> weights);

  const std::vector<long>& weights() const { return weights_; }
  long weight(std::size_t i) const { return weights_[i]; }
  std::size_t size() const { return weights_.size(); }
  long dim() const { return static_cast<long>(weights_.size()) - 1; }
  long degree() const { return degree_; }
  Rational charge(std::size_t i) const { return MakeRational(weights_[i], degree_); }
  IndexSet all() const { return IndexSet::Full(weights_.size()); }

  const std::vector<OrbifoldElement>& elements() const { return elements_; }
  bool ip() const { return ip_; }
  bool transverse() const { return transverse_; }

  /// Copy with the transversality flag forced on.
  WeightVector assuming_transverse() const;

  /// "1,5,12,18".
  std::string to_string() const;

 private:
  std::vector<long> weights_;
  long degree_ = 0;
  std::vector<OrbifoldElement> elements_;
  bool ip_ = false;
  bool transverse_ = false;
};

/// Throws kOutOfRange unless 0 <= l < w.
const OrbifoldElement& Element(const WeightVector& wv, long l);
Census ComputeCensus(const WeightVector& wv);
FaceSubgroup Subgroup(const WeightVector& wv, IndexSet J);

/// Newton polytope of degree-w monomials is d-dimensional and has
/// (1,...,1) in its relative interior.
bool IpProperty(const std::vector<long>& weights);
/// Combinatorial quasi-smoothness test for a general degree-w polynomial.
bool Transverse(const std::vector<long>& weights);

/// prod (w - w_i) / w_i. Throws kNonIntegerMilnor if the vector is flagged
/// transverse but the product is fractional.
Rational MilnorNumber(const WeightVector& wv);

/// A rational function in s = t^{1/denominator}.
struct RootSeries {
  long denominator = 1;
  RationalT in_root;
};

/// prod over theta_j(l) = 0 of (1 - t^{1-q_j}) / (1 - t^{q_j}).
RootSeries PoincareSeries(const WeightVector& wv, long l);

/// counts[k] = #{u : u_j = 0 exactly for j in J, sum w_i u_i = k w} for
/// k = 0..K.
std::vector<Integer> LatticeCounts(const WeightVector& wv, IndexSet J, long K);

}  // namespace wpcy

#endif  // WPCY_WEIGHTS_HPP_
