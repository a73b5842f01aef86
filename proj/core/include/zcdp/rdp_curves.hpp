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

#ifndef ZCDP_RDP_CURVES_H_
#define ZCDP_RDP_CURVES_H_

#include <cstdint>

#include "zcdp/mechanism.hpp"

namespace zcdp {

// Exact RDP curves eps_hat(alpha) for each mechanism family.  Every function
// returns the closed-form KL divergence at alpha == 1, evaluates in log space
// for large exponents, and switches to a second-order expansion in
// (alpha - 1) below 1e-6 so the alpha -> 1 approach never hits 0/0.

// Worst case over all eps-DP mechanisms (attained by binary randomized
// response):
//   eps_hat(alpha) = log((e^{alpha eps} + e^{(1-alpha) eps})/(e^eps + 1))
//                    / (alpha - 1),
//   eps_hat(1) = eps * tanh(eps/2).
double rdp_generic_dp(double eps, RenyiOrder order);

// Laplace mechanism calibrated to eps-DP (unit sensitivity, scale 1/eps):
//   eps_hat(alpha) = log(a/(2a-1) e^{(a-1)eps} + (a-1)/(2a-1) e^{-a eps})
//                    / (alpha - 1)  with a = alpha,
//   eps_hat(1) = eps + e^{-eps} - 1.
double rdp_laplace(double eps, RenyiOrder order);

// Divergence between a discrete Laplace distribution of scale parameter a
// and its copy shifted by d.  Symmetric in the direction of the shift.
double rdp_discrete_laplace_shift(double a, std::int64_t d, RenyiOrder order);

// Discrete Laplace mechanism for integer sensitivity delta, calibrated to
// eps-DP; the worst pair is the full shift d = delta at scale a = eps/delta.
double rdp_discrete_laplace(double eps, std::int64_t delta, RenyiOrder order);

// k-ary randomized response:
//   eps_hat(alpha) = log((e^{alpha eps} + e^{(1-alpha)eps} + k - 2)
//                        / (k - 1 + e^eps)) / (alpha - 1),
//   eps_hat(1) = eps (e^eps - 1)/(e^eps - 1 + k).
double rdp_krr(double eps, int k, RenyiOrder order);

// Basic one-hot RAPPOR; exactly twice the generic curve at eps/2 and
// independent of the encoding dimension.
double rdp_rappor(double eps, RenyiOrder order);

// Bounded-range curve for a fixed log-ratio window [-t, -t + eta].
// Zero at t == 0 and t == eta.
double rdp_br_at_t(double eta, double t, RenyiOrder order);

// Envelope over t of rdp_br_at_t: the worst case over all eta-bounded-range
// mechanisms.  For alpha > 1 the maximizing window offset is
//   t*(alpha) = log(alpha (e^{alpha eta} - e^eta)
//                   / ((alpha-1)(e^{alpha eta} - 1))),
// computed without forming e^{alpha eta}.
double rdp_br(double eta, RenyiOrder order);

// The maximizing t above; requires alpha > 1.
double br_optimal_t(double eta, double alpha);

// The t maximizing the KL divergence: eta - log((e^eta - 1)/eta).
double br_kl_optimal_t(double eta);

// Uniform evaluable view over all families, so searches over alpha can treat
// mechanisms interchangeably.  Immutable and safe to share across threads.
class RdpCurve {
 public:
  explicit RdpCurve(Mechanism mechanism);

  double operator()(RenyiOrder order) const;
  double kl() const { return kl_; }
  double cap() const { return cap_; }
  const Mechanism& mechanism() const { return mechanism_; }

 private:
  Mechanism mechanism_;
  double kl_;
  double cap_;
};

}  // namespace zcdp

#endif  // ZCDP_RDP_CURVES_H_
