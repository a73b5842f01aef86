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

#ifndef ZCDP_VERIFY_H_
#define ZCDP_VERIFY_H_

#include <stdexcept>
#include <string>
#include <vector>

#include "zcdp/mechanism.hpp"
#include "zcdp/rdp_curves.hpp"

namespace zcdp {

// Numerical certification of the closed-form bounds: maximize
// f(alpha) = eps_hat(alpha)/alpha over alpha, compare against the claimed
// constants, and emit machine-readable reports.

struct SupSearchResult {
  double alpha_star = 1.0;
  double sup_value = 0.0;
  bool attained_at_limit = false;  // sup reached as alpha -> 1+
  int grid_size = 0;
  int refinement_iterations = 0;
};

// Maximizes eps_hat(alpha)/alpha over (1, alpha_max].  Evaluates a log-spaced
// grid of at least 2000 points in alpha - 1, keeps the alpha -> 1 limit as a
// candidate, and golden-section refines around every local grid maximum to
// width tol.  Since f(alpha) <= cap/alpha, the grid end is extended until
// everything beyond it is provably below the maximum found, which makes the
// sup over the unbounded order range finitely checkable.
SupSearchResult sup_rdp_over_alpha(const RdpCurve& curve, double alpha_max,
                                   double tol);

struct Claim {
  std::string name;
  double expected = 0.0;
  double observed = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct VerificationReport {
  Mechanism mechanism;
  std::vector<Claim> claims;
  bool pass() const;
};

// JSON document {"mechanism": ..., "params": {...}, "claims": [...],
// "pass": ...} with sorted keys, so serialize(parse(x)) == x.
std::string to_json(const VerificationReport& report);

// Checks everything claimed about one mechanism: the sup search against the
// zCDP constant, agreement with the numerical oracle at sampled orders, and
// per-family shape facts (monotone f for Laplace-like families and bounded
// range; a strict sup excess for k-RR past the threshold).  Failures are
// recorded in the report, never thrown.
VerificationReport certify_tightness(const Mechanism& mechanism,
                                     double alpha_max, double tol);

// Midpoint concavity of the k-RR curve over every pair drawn from a
// `grid`-point mesh on (1, 100].
bool check_concavity_krr(double eps, int k, int grid);

// Whether the curve's slope at 1 stays below its value there,
//   eps^2 ((k+2)e^eps + k - 2) / (2 (k + e^eps - 1)^2)
//     <= eps (e^eps - 1) / (e^eps - 1 + k),
// which holds exactly when k <= krr_threshold(eps).
bool check_derivative_condition_krr(double eps, int k);

// Thrown when a certification scan cannot reproduce a claimed fact.
class VerificationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// For k past krr_threshold(eps), finds an order alpha0 in (1, 2] with
// f(alpha0) > eps_hat(1) (1 + 1e-9).  Throws std::domain_error when k is not
// past the threshold and VerificationFailure when no witness appears on a
// dense scan.
double check_non_optimality_witness(double eps, int k);

// rho(eps_small) / (eps_small^2 / c) for the family of `mechanism` with its
// privacy parameter replaced by eps_small; near 1 when c is the family's
// small-budget constant.
double check_asymptotics(const Mechanism& mechanism, double c, double eps_small);

}  // namespace zcdp

#endif  // ZCDP_VERIFY_H_
