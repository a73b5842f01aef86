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

#include "zcdp/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <json.hpp>

#include "zcdp/oracle.hpp"
#include "zcdp/zcdp_bounds.hpp"

namespace zcdp {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// f(alpha) = eps_hat(alpha)/alpha as a function of u = log(alpha - 1).
double f_of_log_order(const RdpCurve& curve, double u) {
  const double alpha = 1.0 + std::exp(u);
  return curve(RenyiOrder::of(alpha)) / alpha;
}

struct GoldenResult {
  double u;
  double value;
  int iterations;
};

// Golden-section maximization of f on [a, b] in log(alpha - 1) units, run
// until the alpha bracket is narrower than tol.
GoldenResult golden_maximize(const RdpCurve& curve, double a, double b,
                             double tol) {
  constexpr double kRatio = 0.6180339887498949;
  double c = b - kRatio * (b - a);
  double d = a + kRatio * (b - a);
  double fc = f_of_log_order(curve, c);
  double fd = f_of_log_order(curve, d);
  int iterations = 0;
  while (std::exp(b) - std::exp(a) > tol && iterations < 200) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kRatio * (b - a);
      fc = f_of_log_order(curve, c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kRatio * (b - a);
      fd = f_of_log_order(curve, d);
    }
    ++iterations;
  }
  const double u = 0.5 * (a + b);
  return {u, f_of_log_order(curve, u), iterations};
}

}  // namespace

SupSearchResult sup_rdp_over_alpha(const RdpCurve& curve, double alpha_max,
                                   double tol) {
  if (!(alpha_max > 1)) throw std::domain_error("alpha_max must be > 1");
  if (!(tol > 0)) throw std::domain_error("tol must be > 0");
  const double kl = curve.kl();
  const int n = 2000;
  const double u_lo = std::log(1e-8);

  SupSearchResult result;
  double hi = alpha_max;
  for (int round = 0; round < 24; ++round) {
    const double u_hi = std::log(hi - 1.0);
    std::vector<double> values(n + 1);
    for (int i = 0; i <= n; ++i) {
      values[i] = f_of_log_order(curve, u_lo + (u_hi - u_lo) * i / n);
    }
    double best_value = kl;  // alpha -> 1 is in the closure of the domain
    double best_alpha = 1.0;
    int refinements = 0;
    for (int i = 0; i <= n; ++i) {
      const bool left_ok = i == 0 || values[i] >= values[i - 1];
      const bool right_ok = i == n || values[i] >= values[i + 1];
      if (!(left_ok && right_ok)) continue;
      const double lo_u = u_lo + (u_hi - u_lo) * std::max(i - 1, 0) / n;
      const double hi_u = u_lo + (u_hi - u_lo) * std::min(i + 1, n) / n;
      const GoldenResult refined = golden_maximize(curve, lo_u, hi_u, tol);
      refinements += refined.iterations;
      const double candidate = std::max(refined.value, values[i]);
      if (candidate > best_value) {
        best_value = candidate;
        best_alpha =
            refined.value >= values[i]
                ? 1.0 + std::exp(refined.u)
                : 1.0 + std::exp(u_lo + (u_hi - u_lo) * i / n);
      }
    }
    result.alpha_star = best_alpha;
    result.sup_value = best_value;
    result.grid_size = n + 1;
    result.refinement_iterations = refinements;
    // Beyond hi every value is at most cap/hi; stop once that cannot win.
    if (curve.cap() / hi <= best_value || hi > 1e9) break;
    hi = std::max(2.0 * curve.cap() / best_value, 2.0 * hi);
  }
  result.attained_at_limit =
      result.sup_value - kl <= tol * std::max(1.0, kl);
  return result;
}

bool VerificationReport::pass() const {
  return std::all_of(claims.begin(), claims.end(),
                     [](const Claim& c) { return c.pass; });
}

namespace {

Claim equality_claim(std::string name, double expected, double observed,
                     double tolerance) {
  Claim c{std::move(name), expected, observed, tolerance, false};
  c.pass = std::abs(expected - observed) <= tolerance;
  return c;
}

Claim exceeds_claim(std::string name, double threshold, double observed) {
  Claim c{std::move(name), threshold, observed, 0.0, false};
  c.pass = observed > threshold;
  return c;
}

OracleResult oracle_divergence(const Mechanism& mechanism, RenyiOrder order) {
  return std::visit(
      [order](const auto& m) -> OracleResult {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, Laplace>) {
          return renyi_continuous(laplace_density_pair(m.eps), order, 1e-10);
        } else if constexpr (std::is_same_v<T, DiscreteLaplace>) {
          return renyi_discrete_laplace(m.eps / static_cast<double>(m.delta),
                                        m.delta, order, 1e-12);
        } else if constexpr (std::is_same_v<T, BoundedRange>) {
          const double t = order.is_kl() ? br_kl_optimal_t(m.eta)
                                         : br_optimal_t(m.eta, order.alpha());
          const auto pair = std::get<DiscretePair>(
              mechanism_worst_pair(Mechanism{m}, t));
          return renyi_discrete(pair.p, pair.q, order);
        } else {
          const auto pair =
              std::get<DiscretePair>(mechanism_worst_pair(Mechanism{m}));
          return renyi_discrete(pair.p, pair.q, order);
        }
      },
      mechanism);
}

// Largest increase of f(alpha) along a log-spaced order grid; a tight
// mechanism whose constant sits at the alpha -> 1 limit must show none.
double max_f_increase(const RdpCurve& curve, double alpha_max) {
  const int n = 160;
  double worst = -kInf;
  double prev = curve.kl();
  for (int i = 0; i <= n; ++i) {
    const double u = std::log(1e-6) + (std::log(alpha_max - 1.0) - std::log(1e-6)) * i / n;
    const double alpha = 1.0 + std::exp(u);
    const double value = curve(RenyiOrder::of(alpha)) / alpha;
    worst = std::max(worst, value - prev);
    prev = value;
  }
  return worst;
}

}  // namespace

VerificationReport certify_tightness(const Mechanism& mechanism,
                                     double alpha_max, double tol) {
  validate(mechanism);
  VerificationReport report{mechanism, {}};
  const RdpCurve curve(mechanism);
  const ZcdpBound bound = zcdp_bound(mechanism);
  const SupSearchResult sup = sup_rdp_over_alpha(curve, alpha_max, tol);

  if (bound.tight) {
    report.claims.push_back(equality_claim(
        "sup_matches_bound", bound.rho, sup.sup_value,
        1e-6 * std::max(1.0, std::abs(bound.rho))));
    report.claims.push_back(
        equality_claim("sup_attained_at_limit", 1.0,
                       sup.attained_at_limit ? 1.0 : 0.0, 0.0));
  } else {
    // Best-known bounds must still dominate the observed sup.
    report.claims.push_back(equality_claim(
        "bound_dominates_sup", std::max(bound.rho, sup.sup_value), bound.rho,
        1e-9 * std::max(1.0, bound.rho)));
  }

  if (const auto* krr = std::get_if<Krr>(&mechanism);
      krr && krr->k > krr_threshold(krr->eps)) {
    report.claims.push_back(exceeds_claim("sup_exceeds_kl",
                                          curve.kl() * (1.0 + 1e-9),
                                          sup.sup_value));
    report.claims.push_back(equality_claim(
        "sup_not_at_limit", 0.0, sup.attained_at_limit ? 1.0 : 0.0, 0.0));
  }

  for (const double alpha : {1.0, 1.5, 2.0, 5.0, 20.0}) {
    const RenyiOrder order =
        alpha == 1.0 ? RenyiOrder::kl() : RenyiOrder::of(alpha);
    const double closed = curve(order);
    const OracleResult oracle = oracle_divergence(mechanism, order);
    report.claims.push_back(equality_claim(
        "oracle_agreement_alpha_" + std::to_string(alpha), closed,
        oracle.value,
        std::max(1e-8 * std::abs(closed), oracle.error_bound)));
  }

  const bool monotone_family = std::holds_alternative<Laplace>(mechanism) ||
                               std::holds_alternative<DiscreteLaplace>(mechanism) ||
                               std::holds_alternative<BoundedRange>(mechanism);
  if (monotone_family) {
    report.claims.push_back(equality_claim(
        "f_nonincreasing", 0.0,
        std::max(0.0, max_f_increase(curve, alpha_max)), 1e-10));
  }
  if (const auto* krr = std::get_if<Krr>(&mechanism); krr && krr->k <= 6) {
    report.claims.push_back(equality_claim(
        "curve_concave", 1.0,
        check_concavity_krr(krr->eps, krr->k, 120) ? 1.0 : 0.0, 0.0));
  }
  return report;
}

bool check_concavity_krr(double eps, int k, int grid) {
  if (grid < 3) throw std::domain_error("grid must be >= 3");
  std::vector<double> alphas(grid);
  std::vector<double> values(grid);
  for (int i = 0; i < grid; ++i) {
    alphas[i] = 1.0 + 99.0 * (i + 1) / grid;
    values[i] = rdp_krr(eps, k, RenyiOrder::of(alphas[i]));
  }
  for (int i = 0; i < grid; ++i) {
    for (int j = i + 1; j < grid; ++j) {
      const double mid =
          rdp_krr(eps, k, RenyiOrder::of(0.5 * (alphas[i] + alphas[j])));
      if (mid < 0.5 * (values[i] + values[j]) - 1e-10) return false;
    }
  }
  return true;
}

bool check_derivative_condition_krr(double eps, int k) {
  if (!(eps > 0) || !std::isfinite(eps)) {
    throw std::domain_error("eps must be positive");
  }
  if (k < 2) throw std::domain_error("k must be >= 2");
  // Both sides scaled by e^{-eps} so huge budgets do not overflow:
  //   slope(1) = eps^2 (k+2 + (k-2)u) u / (2 (1 + (k-1)u)^2),
  //   kl       = eps (1-u) / (1 + (k-1)u),          u = e^{-eps}.
  const double u = std::exp(-eps);
  const double denom = 1.0 + (k - 1.0) * u;
  const double slope_at_one =
      eps * eps * ((k + 2.0) + (k - 2.0) * u) * u / (2.0 * denom * denom);
  const double kl = eps * (1.0 - u) / denom;
  return slope_at_one <= kl;
}

double check_non_optimality_witness(double eps, int k) {
  if (!(k > krr_threshold(eps))) {
    throw std::domain_error("k is not past krr_threshold(eps)");
  }
  const double kl = rdp_krr(eps, k, RenyiOrder::kl());
  const double target = kl * (1.0 + 1e-9);
  const int n = 10000;
  for (int i = 0; i <= n; ++i) {
    const double u = std::log(1e-7) + (0.0 - std::log(1e-7)) * i / n;
    const double alpha = 1.0 + std::exp(u);  // alpha in (1, 2]
    if (rdp_krr(eps, k, RenyiOrder::of(alpha)) / alpha > target) {
      return alpha;
    }
  }
  throw VerificationFailure("no non-optimality witness found in (1, 2]");
}

double check_asymptotics(const Mechanism& mechanism, double c,
                         double eps_small) {
  if (!(eps_small > 0 && eps_small <= 0.01)) {
    throw std::domain_error("eps_small must lie in (0, 0.01]");
  }
  if (!(c > 0)) throw std::domain_error("c must be positive");
  const Mechanism scaled = std::visit(
      [eps_small](const auto& m) -> Mechanism {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, GenericDp>) {
          return GenericDp{eps_small};
        } else if constexpr (std::is_same_v<T, Laplace>) {
          return Laplace{eps_small};
        } else if constexpr (std::is_same_v<T, DiscreteLaplace>) {
          return DiscreteLaplace{eps_small, m.delta};
        } else if constexpr (std::is_same_v<T, Krr>) {
          return Krr{eps_small, m.k};
        } else if constexpr (std::is_same_v<T, Rappor>) {
          return Rappor{eps_small, m.d};
        } else {
          static_assert(std::is_same_v<T, BoundedRange>);
          return BoundedRange{eps_small};
        }
      },
      mechanism);
  return zcdp_bound(scaled).rho / (eps_small * eps_small / c);
}

namespace {

nlohmann::json mechanism_params(const Mechanism& mechanism) {
  return std::visit(
      [](const auto& m) -> nlohmann::json {
        using T = std::decay_t<decltype(m)>;
        nlohmann::json params;
        if constexpr (std::is_same_v<T, BoundedRange>) {
          params["eta"] = m.eta;
        } else {
          params["eps"] = m.eps;
        }
        if constexpr (std::is_same_v<T, DiscreteLaplace>) params["delta"] = m.delta;
        if constexpr (std::is_same_v<T, Krr>) params["k"] = m.k;
        if constexpr (std::is_same_v<T, Rappor>) params["d"] = m.d;
        return params;
      },
      mechanism);
}

}  // namespace

std::string to_json(const VerificationReport& report) {
  nlohmann::json doc;
  doc["mechanism"] = mechanism_name(report.mechanism);
  doc["params"] = mechanism_params(report.mechanism);
  doc["pass"] = report.pass();
  nlohmann::json claims = nlohmann::json::array();
  for (const Claim& c : report.claims) {
    nlohmann::json jc;
    jc["name"] = c.name;
    jc["expected"] = c.expected;
    jc["observed"] = c.observed;
    jc["tolerance"] = c.tolerance;
    jc["pass"] = c.pass;
    claims.push_back(jc);
  }
  doc["claims"] = claims;
  return doc.dump();
}

}  // namespace zcdp
