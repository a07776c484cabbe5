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

#include "wpcy/mirror_verify.hpp"

#include <algorithm>

#include "wpcy/bipoly.hpp"
#include "wpcy/errors.hpp"
#include "wpcy/orbifold.hpp"

namespace wpcy {

std::string VerificationReport::status() const {
  if (!global_identity) return "fail";
  if (!stringy_polynomial) return transverse ? "fail" : "n/a";
  if (!hodge_mirror || !hodge_orbifold) return transverse ? "fail" : "n/a";
  const bool pairs_ok = std::all_of(hodge_mirror_pairs.begin(), hodge_mirror_pairs.end(),
                                    [](const HodgePair& h) { return h.ok; });
  if (!pairs_ok) return "fail";
  if (transverse && (!euler_consistent || !poincare_agrees.value_or(false))) return "fail";
  return "pass";
}

VerificationReport Verify(const WeightVector& wv, const StringyOptions& opts) {
  if (!wv.ip()) throw Error(ErrorKind::kNotIP, wv.to_string() + " lacks the IP property");
  VerificationReport r;
  r.weights = wv.weights();
  r.degree = wv.degree();
  r.ip = wv.ip();
  r.transverse = wv.transverse();

  const auto pieces = StringyEPerL(wv, opts);
  const auto orb = MirrorOrbifoldE(wv);
  for (const auto& p : pieces) r.stringy += p;
  r.orbifold = orb.value;
  for (std::size_t l = 0; l < pieces.size(); ++l) {
    if (!(pieces[l] == orb.per_l[l])) r.per_l_failures.push_back(static_cast<long>(l));
  }
  r.global_identity = r.per_l_failures.empty() && r.stringy == r.orbifold;
  r.stringy_polynomial = r.stringy.is_polynomial();

  r.euler_str = StringyEuler(wv, opts);
  r.euler_orb = VafaEuler(wv);
  const long n = wv.dim() - 1;
  r.euler_consistent = r.euler_str == (n % 2 == 0 ? r.euler_orb : Rational(-r.euler_orb));

  if (r.stringy_polynomial) {
    const BiPoly e_mirror = r.stringy.to_polynomial();
    try {
      r.hodge_mirror = ExtractHodge(e_mirror, n);
      r.hodge_orbifold = ExtractHodge(MirrorTransform(r.orbifold.to_polynomial(), n), n);
      for (long p = 0; p <= n; ++p) {
        for (long q = 0; q <= n; ++q) {
          HodgePair h{p, q, r.hodge_mirror->at(p, q), r.hodge_orbifold->at(n - p, q), false};
          h.ok = h.mirror == h.orbifold;
          r.hodge_mirror_pairs.push_back(std::move(h));
        }
      }
    } catch (const Error& e) {
      r.hodge_mirror.reset();
      r.hodge_orbifold.reset();
      r.hodge_error = e.what();
    }
    if (r.transverse) {
      try {
        r.poincare_agrees = SignTwist(VafaPoincare(wv)) == e_mirror;
      } catch (const Error&) {
        r.poincare_agrees = false;
      }
    }
  }
  return r;
}

bool PerLCheck(const WeightVector& wv, long l, const StringyOptions& opts) {
  Element(wv, l);
  const auto orb = MirrorOrbifoldE(wv);
  return StringyEPerL(wv, l, opts) == orb.per_l[static_cast<std::size_t>(l)];
}

}  // namespace wpcy
