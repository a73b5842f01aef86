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

#ifndef ZCDP_ORACLE_H_
#define ZCDP_ORACLE_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "zcdp/mechanism.hpp"

namespace zcdp {

// Numerical Renyi divergences computed directly from output distributions.
// Everything here is independent of the closed forms in rdp_curves.hpp; it is
// the ground truth they are certified against.

// A finite distribution held as log masses so that products of hundreds of
// factors (or masses like e^{-1000}) stay representable.
class DiscreteDist {
 public:
  // Masses must be >= 0 and sum to 1 within 1e-12.
  static DiscreteDist from_probabilities(std::span<const double> masses);
  // Log masses (-infinity allowed); exp of them must sum to 1 within 1e-12.
  static DiscreteDist from_log_masses(std::vector<double> log_masses);

  std::size_t size() const { return log_mass_.size(); }
  double log_mass(std::size_t i) const { return log_mass_[i]; }
  double mass(std::size_t i) const;
  std::span<const double> log_masses() const { return log_mass_; }

 private:
  explicit DiscreteDist(std::vector<double> log_masses)
      : log_mass_(std::move(log_masses)) {}
  std::vector<double> log_mass_;
};

// A divergence value together with a bound on the truncation, quadrature and
// floating-point error of its own computation.
struct OracleResult {
  double value = 0.0;
  double error_bound = 0.0;
};

// Exact finite sum sum_i p_i^alpha q_i^(1-alpha) in log space (alpha > 1) or
// sum_i p_i log(p_i/q_i) (alpha = 1).  Outcomes with p_i = 0 contribute
// nothing; an outcome with q_i = 0 < p_i makes the divergence infinite and is
// reported as a domain error ("not absolutely continuous").
OracleResult renyi_discrete(const DiscreteDist& p, const DiscreteDist& q,
                            RenyiOrder order);

// Bilateral truncated sum for a discrete Laplace distribution of scale a
// against its shift by d.  The summation window is sized so both geometric
// tails fall below tol; the reported error_bound includes the tail estimate.
OracleResult renyi_discrete_laplace(double a, std::int64_t d, RenyiOrder order,
                                    double tol);

// A pair of continuous log densities, non-smooth only at the listed points.
struct ContinuousDensityPair {
  std::function<double(double)> log_p;
  std::function<double(double)> log_q;
  std::vector<double> singular_points;
};

// Adaptive Simpson quadrature of the blended integrand, split at every
// singular point, with analytic exponential tail bounds outside a window on
// which both log densities are affine.  Oversized exponents are handled by
// scaling each segment, so the result is exact in log space even when the
// underlying integral overflows a double.
OracleResult renyi_continuous(const ContinuousDensityPair& pair,
                              RenyiOrder order, double tol);

// The shifted pair of Laplace densities produced by an eps-DP Laplace
// mechanism on neighboring inputs (scale 1/eps, unit shift).
ContinuousDensityPair laplace_density_pair(double eps);

struct DiscretePair {
  DiscreteDist p;
  DiscreteDist q;
};

using WorstCasePair = std::variant<DiscretePair, ContinuousDensityPair>;

// The neighboring-input output pair attaining each family's RDP curve.
// Discrete Laplace is reduced to its delta+1 likelihood-ratio classes, which
// leaves every Renyi divergence unchanged and keeps the support finite.
// Bounded range requires the window offset t (the curves' maximizer depends
// on alpha); other families ignore br_t.  RAPPOR enumerates all 2^d outcomes
// and refuses d > 16.
WorstCasePair mechanism_worst_pair(const Mechanism& mechanism,
                                   std::optional<double> br_t = std::nullopt);

// Seeded random pair whose log ratios lie in an interval [-t, -t + width]
// with t in [0, width]; returns the realized t.  Reproducible bit for bit.
struct RatioBoundedPair {
  DiscreteDist p;
  DiscreteDist q;
  double t_used;
};
RatioBoundedPair random_bounded_ratio_pair(int outcomes, double width,
                                           std::uint64_t seed);

// Seeded random pair with every log ratio clamped into [-eps, eps]; the
// random-instance generator for pure-DP domination tests.
DiscretePair random_pure_dp_pair(int outcomes, double eps, std::uint64_t seed);

}  // namespace zcdp

#endif  // ZCDP_ORACLE_H_
