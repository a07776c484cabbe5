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

#include "wpcy/weights.hpp"

#include <algorithm>
#include <numeric>

#include "wpcy/errors.hpp"

namespace wpcy {

namespace {

// Degrees above this make the lattice enumerations hopeless anyway and
// would overflow l * w_i in a long on 32-bit-long platforms.
constexpr long kMaxDegree = 46340;
constexpr std::size_t kMaxWeights = 16;

void Enumerate(const std::vector<long>& weights, std::size_t i, long rest,
               std::vector<long>& cur, std::vector<std::vector<long>>& out) {
  if (i + 1 == weights.size()) {
    if (rest % weights[i] != 0) return;
    cur[i] = rest / weights[i];
    out.push_back(cur);
    return;
  }
  for (long a = 0; a * weights[i] <= rest; ++a) {
    cur[i] = a;
    Enumerate(weights, i + 1, rest - a * weights[i], cur, out);
  }
}

std::size_t Rank(std::vector<std::vector<Rational>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][c] == 0) continue;
      Rational f = rows[r][c] / rows[rank][c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

// Phase one of the simplex method with Bland's rule: is {x >= 0 : A x = b}
// nonempty? A is given column-wise.
bool Feasible(const std::vector<std::vector<Rational>>& columns, std::vector<Rational> b) {
  const std::size_t m = b.size();
  const std::size_t n = columns.size();
  const std::size_t width = n + m;
  std::vector<std::vector<Rational>> tab(m, std::vector<Rational>(width + 1));
  for (std::size_t i = 0; i < m; ++i) {
    const Rational sign = b[i] < 0 ? -1 : 1;
    for (std::size_t j = 0; j < n; ++j) tab[i][j] = sign * columns[j][i];
    tab[i][n + i] = 1;
    tab[i][width] = sign * b[i];
  }
  std::vector<Rational> z(width + 1);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) z[j] -= tab[i][j];
    z[width] -= tab[i][width];
  }
  std::vector<std::size_t> basis(m);
  std::iota(basis.begin(), basis.end(), n);

  while (true) {
    std::size_t enter = width;
    for (std::size_t j = 0; j < width; ++j) {
      if (z[j] < 0) {
        enter = j;
        break;
      }
    }
    if (enter == width) break;
    std::size_t leave = m;
    Rational best;
    for (std::size_t i = 0; i < m; ++i) {
      if (tab[i][enter] <= 0) continue;
      Rational ratio = tab[i][width] / tab[i][enter];
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    // The phase-one objective is bounded below by zero.
    if (leave == m) break;
    const Rational p = tab[leave][enter];
    for (auto& x : tab[leave]) x /= p;
    auto eliminate = [&](std::vector<Rational>& row) {
      if (row[enter] == 0) return;
      const Rational f = row[enter];
      for (std::size_t k = 0; k <= width; ++k) row[k] -= f * tab[leave][k];
    };
    for (std::size_t i = 0; i < m; ++i) {
      if (i != leave) eliminate(tab[i]);
    }
    eliminate(z);
    basis[leave] = enter;
  }
  return z[width] == 0;
}

bool Representable(const std::vector<char>& reach, long x) {
  return x >= 0 && x < static_cast<long>(reach.size()) && reach[static_cast<std::size_t>(x)];
}

}  // namespace

std::string IndexSet::to_string() const {
  std::string s = "{";
  bool first = true;
  for (std::size_t i = 0; i < 32; ++i) {
    if (!contains(i)) continue;
    if (!first) s += ",";
    s += std::to_string(i);
    first = false;
  }
  return s + "}";
}

WeightVector WeightVector::Validate(std::vector<long> weights) {
  if (weights.empty()) throw Error(ErrorKind::kEmptyInput, "no weights given");
  if (weights.size() < 2) {
    throw Error(ErrorKind::kInvalidArgument, "at least two weights are required");
  }
  if (weights.size() > kMaxWeights) {
    throw Error(ErrorKind::kInvalidArgument,
                "at most " + std::to_string(kMaxWeights) + " weights are supported");
  }
  long w = 0;
  for (long x : weights) {
    if (x <= 0) throw Error(ErrorKind::kInvalidArgument, "weights must be positive");
    if (x > kMaxDegree || w + x > kMaxDegree) {
      throw Error(ErrorKind::kInvalidArgument,
                  "degree exceeds the supported maximum " + std::to_string(kMaxDegree));
    }
    w += x;
  }
  for (std::size_t skip = 0; skip < weights.size(); ++skip) {
    long g = 0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
      if (i != skip) g = std::gcd(g, weights[i]);
    }
    if (g != 1) {
      throw Error(ErrorKind::kNotWellFormed,
                  "weights without index " + std::to_string(skip) + " share the factor " +
                      std::to_string(g));
    }
  }

  WeightVector wv;
  wv.weights_ = std::move(weights);
  wv.degree_ = w;
  wv.elements_.reserve(static_cast<std::size_t>(w));
  for (long l = 0; l < w; ++l) {
    OrbifoldElement e;
    e.l = l;
    long total = 0;
    for (std::size_t i = 0; i < wv.weights_.size(); ++i) {
      const long r = l * wv.weights_[i] % w;
      e.residues.push_back(r);
      e.theta.push_back(MakeRational(r, w));
      total += r;
      if (r != 0) {
        ++e.size;
        e.support = IndexSet(e.support.bits() | (std::uint32_t{1} << i));
      }
    }
    e.age = total / w;
    wv.elements_.push_back(std::move(e));
  }
  wv.ip_ = IpProperty(wv.weights_);
  wv.transverse_ = Transverse(wv.weights_);
  return wv;
}

WeightVector WeightVector::assuming_transverse() const {
  WeightVector c = *this;
  c.transverse_ = true;
  return c;
}

std::string WeightVector::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(weights_[i]);
  }
  return s;
}

const OrbifoldElement& Element(const WeightVector& wv, long l) {
  if (l < 0 || l >= wv.degree()) {
    throw Error(ErrorKind::kOutOfRange,
                "l = " + std::to_string(l) + " outside [0, " + std::to_string(wv.degree()) + ")");
  }
  return wv.elements()[static_cast<std::size_t>(l)];
}

Census ComputeCensus(const WeightVector& wv) {
  Census c;
  for (const auto& e : wv.elements()) ++c[{e.size, e.age}];
  return c;
}

FaceSubgroup Subgroup(const WeightVector& wv, IndexSet J) {
  FaceSubgroup g{J, {}};
  for (const auto& e : wv.elements()) {
    if (J.includes(e.support)) g.members.push_back(e.l);
  }
  return g;
}

bool IpProperty(const std::vector<long>& weights) {
  const long w = std::accumulate(weights.begin(), weights.end(), 0L);
  const std::size_t n = weights.size();
  std::vector<std::vector<long>> points;
  std::vector<long> cur(n);
  Enumerate(weights, 0, w, cur, points);

  // Points p - 1; the interior condition asks for an all-positive
  // combination of them summing to zero, i.e. x >= 0 with
  // sum x_p (p - 1) = -sum (p - 1).
  std::vector<std::vector<Rational>> columns;
  std::vector<Rational> b(n);
  for (const auto& p : points) {
    std::vector<Rational> q(n);
    bool zero = true;
    for (std::size_t i = 0; i < n; ++i) {
      q[i] = p[i] - 1;
      b[i] -= q[i];
      zero = zero && p[i] == 1;
    }
    if (!zero) columns.push_back(std::move(q));
  }
  if (Rank(columns) + 1 != n) return false;
  return Feasible(columns, std::move(b));
}

bool Transverse(const std::vector<long>& weights) {
  const long w = std::accumulate(weights.begin(), weights.end(), 0L);
  const std::size_t n = weights.size();
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  for (std::uint32_t s = 1; s <= full; ++s) {
    std::vector<char> reach(static_cast<std::size_t>(w) + 1, 0);
    reach[0] = 1;
    for (std::size_t i = 0; i < n; ++i) {
      if (!((s >> i) & 1U)) continue;
      for (long x = weights[i]; x <= w; ++x) {
        if (reach[static_cast<std::size_t>(x - weights[i])]) reach[static_cast<std::size_t>(x)] = 1;
      }
    }
    if (reach[static_cast<std::size_t>(w)]) continue;
    std::size_t pointers = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (!((s >> j) & 1U) && Representable(reach, w - weights[j])) ++pointers;
    }
    if (pointers < static_cast<std::size_t>(__builtin_popcount(s))) return false;
  }
  return true;
}

Rational MilnorNumber(const WeightVector& wv) {
  Rational mu = 1;
  for (long x : wv.weights()) mu *= MakeRational(wv.degree() - x, x);
  if (wv.transverse() && !IsInteger(mu)) {
    throw Error(ErrorKind::kNonIntegerMilnor, "Milnor number " + mu.get_str() + " of " +
                                                  wv.to_string() + " is not an integer");
  }
  return mu;
}

RootSeries PoincareSeries(const WeightVector& wv, long l) {
  const auto& e = Element(wv, l);
  Poly num(1);
  std::vector<OneMinusFactor> den;
  for (std::size_t j = 0; j < wv.size(); ++j) {
    if (e.support.contains(j)) continue;
    num *= Poly::OneMinusPower(static_cast<std::size_t>(wv.degree() - wv.weight(j)));
    den.push_back({wv.weight(j), 1});
  }
  return {wv.degree(), RationalT::FromFactored(std::move(num), den)};
}

std::vector<Integer> LatticeCounts(const WeightVector& wv, IndexSet J, long K) {
  if (K < 0) throw Error(ErrorKind::kInvalidArgument, "negative count bound");
  const long w = wv.degree();
  std::vector<long> coins;
  long base = 0;
  for (std::size_t i = 0; i < wv.size(); ++i) {
    if (J.contains(i)) continue;
    coins.push_back(wv.weight(i));
    base += wv.weight(i);
  }
  // Strictly positive parts: spend one of each coin up front.
  const long top = K * w - base;
  std::vector<Integer> counts(static_cast<std::size_t>(K) + 1);
  if (top < 0) {
    if (base == 0) counts[0] = 1;
    return counts;
  }
  std::vector<Integer> ways(static_cast<std::size_t>(top) + 1);
  ways[0] = 1;
  for (long c : coins) {
    for (long x = c; x <= top; ++x) {
      ways[static_cast<std::size_t>(x)] += ways[static_cast<std::size_t>(x - c)];
    }
  }
  for (long k = 0; k <= K; ++k) {
    const long at = k * w - base;
    if (at >= 0) counts[static_cast<std::size_t>(k)] = ways[static_cast<std::size_t>(at)];
  }
  return counts;
}

}  // namespace wpcy
