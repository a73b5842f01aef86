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

#include "zcdp/zcdp_bounds.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "zcdp/special_functions.hpp"

namespace zcdp {

namespace {

void require_positive(double value, const char* what) {
  if (!(value > 0) || !std::isfinite(value)) {
    throw std::domain_error(std::string(what) + " must be positive and finite");
  }
}

// eps (e^eps + 1) - 2 (e^eps - 1), the krr_threshold denominator.  Cancels to
// eps^3/6 + ... near zero, so sum its series sum_{i>=3} eps^i (i-2)/i! there.
double threshold_denominator(double eps) {
  if (eps >= 0.5) {
    return eps * (std::exp(eps) + 1.0) - 2.0 * std::expm1(eps);
  }
  double term = eps * eps * eps / 6.0;  // i = 3
  double sum = term;
  for (int i = 4; i < 60; ++i) {
    term *= eps * (i - 2) / (static_cast<double>(i) * (i - 3));
    sum += term;
    if (term < 1e-20 * sum) break;
  }
  return sum;
}

}  // namespace

ZcdpBound zcdp_generic(double eps) {
  require_positive(eps, "eps");
  return {eps * std::tanh(eps / 2.0), true, "prop:dp-to-zcdp", GenericDp{eps}};
}

ZcdpBound zcdp_laplace(double eps) {
  require_positive(eps, "eps");
  return {eps + std::expm1(-eps), true, "thm:zcdp-lap", Laplace{eps}};
}

ZcdpBound zcdp_discrete_laplace(double eps, std::int64_t delta) {
  require_positive(eps, "eps");
  if (delta < 1) throw std::domain_error("delta must be >= 1");
  const double rho =
      eps + std::expm1(-eps) / sinhc(eps / static_cast<double>(delta));
  return {rho, true, "thm:zcdp-dlap", DiscreteLaplace{eps, delta}};
}

namespace {

// eps (e^eps - 1)/(e^eps - 1 + k) without forming e^eps, so huge budgets
// saturate at eps instead of overflowing.
double krr_limit_constant(double eps, double k) {
  return eps / (1.0 + k / std::expm1(eps));
}

}  // namespace

double krr_threshold(double eps) {
  require_positive(eps, "eps");
  if (eps > 300.0) {
    // 2 e^eps (1 - e^-eps)(1 - (1+eps) e^-eps) / (eps - 2 + (eps+2) e^-eps);
    // the e^-eps corrections are below double resolution here.
    return 2.0 * std::exp(eps - std::log(eps - 2.0));
  }
  double numerator;
  if (eps >= 0.5) {
    numerator = 2.0 * std::expm1(eps) * (std::expm1(eps) - eps);
  } else {
    numerator = 2.0 * std::expm1(eps) * expm1_minus_x(eps);
  }
  return numerator / threshold_denominator(eps);
}

std::optional<double> krr_loose_large_k(double eps, int k, LargeKVariant variant) {
  require_positive(eps, "eps");
  if (k < 2) throw std::domain_error("k must be >= 2");
  // log(v sqrt(S)) = log v + (1/2) log(k - 1 + e^eps), overflow-free.
  const double half_log_s =
      0.5 * log_sum_exp(std::array<LogTerm, 2>{{{0.0, eps}, {std::log(k - 1.0), 0.0}}});
  const double log_arm =
      (variant == LargeKVariant::kEpsInsideLog ? std::log(eps) : -std::log(eps)) +
      half_log_s;
  if (!(log_arm > 0)) return std::nullopt;
  const double rho =
      eps * eps * std::max(1.0 / log_arm, std::exp(-half_log_s));
  if (!(rho > 0) || !std::isfinite(rho)) return std::nullopt;
  return rho;
}

ZcdpBound zcdp_krr(double eps, int k) {
  require_positive(eps, "eps");
  if (k < 2) throw std::domain_error("k must be >= 2");
  if (k <= 6) {
    return {krr_limit_constant(eps, k), true, "thm:zcdp-rr-tight", Krr{eps, k}};
  }
  double rho = krr_limit_constant(eps, 6.0);
  std::string source = "cor:krr-general";
  if (const auto loose = krr_loose_large_k(eps, k, LargeKVariant::kEpsInsideLog);
      loose && *loose < rho) {
    rho = *loose;
    source = "thm:rr-loose-large-k";
  }
  if (const auto loose =
          krr_loose_large_k(eps, k, LargeKVariant::kInverseEpsInsideLog);
      loose && *loose < rho) {
    rho = *loose;
    source = "thm:rr-loose-large-k(inv-eps-form)";
  }
  return {rho, false, source, Krr{eps, k}};
}

ZcdpBound zcdp_rappor(double eps) {
  require_positive(eps, "eps");
  return {eps * std::tanh(eps / 4.0), true, "prop:zcdp-rappor", Rappor{eps}};
}

ZcdpBound zcdp_br(double eta) {
  require_positive(eta, "eta");
  const double half = eta / 2.0;
  const double rho = std::exp(-half) / sinhc(half) + half + log_sinhc(half) - 1.0;
  return {rho, true, "thm:br-cdp", BoundedRange{eta}};
}

ZcdpBound zcdp_bound(const Mechanism& mechanism) {
  validate(mechanism);
  return std::visit(
      [](const auto& m) -> ZcdpBound {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, GenericDp>) {
          return zcdp_generic(m.eps);
        } else if constexpr (std::is_same_v<T, Laplace>) {
          return zcdp_laplace(m.eps);
        } else if constexpr (std::is_same_v<T, DiscreteLaplace>) {
          return zcdp_discrete_laplace(m.eps, m.delta);
        } else if constexpr (std::is_same_v<T, Krr>) {
          return zcdp_krr(m.eps, m.k);
        } else if constexpr (std::is_same_v<T, Rappor>) {
          ZcdpBound b = zcdp_rappor(m.eps);
          b.mechanism = m;  // keep the caller's dimension
          return b;
        } else {
          static_assert(std::is_same_v<T, BoundedRange>);
          return zcdp_br(m.eta);
        }
      },
      mechanism);
}

double zcdp_to_approx_dp(double rho, double delta) {
  require_positive(rho, "rho");
  if (!(delta > 0 && delta < 1)) {
    throw std::domain_error("delta must lie in (0, 1)");
  }
  return rho + 2.0 * std::sqrt(rho * std::log(1.0 / delta));
}

}  // namespace zcdp
