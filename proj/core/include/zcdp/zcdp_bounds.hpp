// Copyright 2026 The zCDP Accountant Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ZCDP_ZCDP_BOUNDS_H_
#define ZCDP_ZCDP_BOUNDS_H_

#include <cstdint>
#include <optional>

#include "zcdp/mechanism.hpp"

namespace zcdp {

// Best known zCDP constants per mechanism family.  `tight` is set only where
// no smaller constant works for that mechanism (or mechanism class), so
// downstream accountants can tell when slack remains.

// rho = eps * tanh(eps/2); worst case over all eps-DP mechanisms.
ZcdpBound zcdp_generic(double eps);

// rho = eps + e^{-eps} - 1.
ZcdpBound zcdp_laplace(double eps);

// rho = eps - (1 - e^{-eps}) / sinhc(eps/delta); interpolates between the
// generic bound at delta = 1 and the Laplace bound as delta -> infinity.
ZcdpBound zcdp_discrete_laplace(double eps, std::int64_t delta);

// k <= 6: rho = eps (e^eps - 1)/(e^eps - 1 + k), tight.
// k >  6: the minimum of the k=6 bound and the large-k bounds below; not
// tight.  The source label records which candidate won.
ZcdpBound zcdp_krr(double eps, int k);

// Alphabet-size threshold k*(eps) above which the k-RR zCDP constant is no
// longer attained as alpha -> 1.  Always >= 6; evaluated by series below
// eps = 0.5 where the denominator cancels to O(eps^3).
double krr_threshold(double eps);

// The two published forms of the vanishing-in-k bound
//   rho = eps^2 * max{1/log(v sqrt(k-1+e^eps)), 1/sqrt(k-1+e^eps)}
// differ in v: the derivation carries v = eps while the summary statement
// carries v = 1/eps (they agree at eps = 1).  Both are certified against sup
// searches over alpha in the test grid; zcdp_krr admits whichever candidates
// have a positive log arm.  Returns nullopt when the log arm is <= 0.
enum class LargeKVariant { kEpsInsideLog, kInverseEpsInsideLog };
std::optional<double> krr_loose_large_k(double eps, int k, LargeKVariant variant);

// rho = eps * tanh(eps/4); independent of the encoding dimension.
ZcdpBound zcdp_rappor(double eps);

// rho = eta/(e^eta - 1) + log((e^eta - 1)/eta) - 1; tight in the class sense
// (some eta-bounded-range mechanism attains it).
ZcdpBound zcdp_br(double eta);

// Dispatch on the mechanism family.
ZcdpBound zcdp_bound(const Mechanism& mechanism);

// Standard conversion eps = rho + 2 sqrt(rho log(1/delta)) to approximate DP.
// Plumbing around the bounds above, not subject to their tightness claims.
double zcdp_to_approx_dp(double rho, double delta);

}  // namespace zcdp

#endif  // ZCDP_ZCDP_BOUNDS_H_
