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

#include "zcdp/rdp_curves.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

#include "zcdp/special_functions.hpp"

namespace zcdp {

namespace {

// Orders closer to 1 than this are evaluated through the series below.  The
// direct quotient log(...)/(alpha-1) carries absolute noise ~1e-16/(alpha-1)
// while the series truncates with error O((alpha-1)^3 budget^4), so the
// switch point scales like budget^{-4/3}: ~2e-3 at small budgets down to
// ~9e-5 at eps = 10.  Both paths stay below 1e-12 relative error at the
// crossover.
double expansion_threshold(double budget) {
  const double b = std::max(1.0, budget);
  return std::clamp(2e-3 / (b * std::cbrt(b)), 1e-8, 2e-3);
}

void require_positive(double value, const char* what) {
  if (!(value > 0) || !std::isfinite(value)) {
    throw std::domain_error(std::string(what) + " must be positive and finite");
  }
}

// eps_hat(1+s) from the first three moments m_j = E_P[log(P/Q)^j] of the
// privacy loss:
//   eps_hat(1+s) = m1 + s (m2 - m1^2)/2 + s^2 (m3 - 3 m1 m2 + 2 m1^3)/6
//                  + O(s^3).
double curve_from_moments(double m1, double m2, double m3, double s) {
  return m1 + s * (m2 - m1 * m1) / 2.0 +
         s * s * (m3 - 3.0 * m1 * m2 + 2.0 * m1 * m1 * m1) / 6.0;
}

// log(e^eps + 1).
double log_exp_plus_one(double eps) { return log1p_exp(eps); }

}  // namespace

double rdp_generic_dp(double eps, RenyiOrder order) {
  require_positive(eps, "eps");
  if (order.is_kl()) {
    return eps * std::tanh(eps / 2.0);
  }
  const double s = order.alpha() - 1.0;
  if (s < expansion_threshold(eps)) {
    const double t = std::tanh(eps / 2.0);
    return curve_from_moments(eps * t, eps * eps, eps * eps * eps * t, s);
  }
  const double alpha = order.alpha();
  const std::array<LogTerm, 2> terms{{{0.0, alpha * eps}, {0.0, (1.0 - alpha) * eps}}};
  return (log_sum_exp(terms) - log_exp_plus_one(eps)) / s;
}

double rdp_laplace(double eps, RenyiOrder order) {
  require_positive(eps, "eps");
  const double kl = eps + std::expm1(-eps);
  if (order.is_kl()) return kl;
  const double s = order.alpha() - 1.0;
  if (s < expansion_threshold(eps)) {
    // Direct series of the curve around alpha = 1 (the mixture weights here
    // depend on alpha, so the generic moment form does not apply).
    const double e = std::exp(-eps);
    const double a1 = kl;
    const double a2 = eps * eps / 2.0 - eps + 2.0 - (eps + 2.0) * e;
    const double a3 = eps * eps * eps / 6.0 - eps * eps / 2.0 + 2.0 * eps - 4.0 +
                      (eps * eps / 2.0 + 2.0 * eps + 4.0) * e;
    return a1 + s * (a2 - a1 * a1 / 2.0) +
           s * s * (a3 - a1 * a2 + a1 * a1 * a1 / 3.0);
  }
  const double alpha = order.alpha();
  const double two_am1 = 2.0 * alpha - 1.0;
  const std::array<LogTerm, 2> terms{{
      {std::log(alpha / two_am1), s * eps},
      {std::log(s / two_am1), -alpha * eps},
  }};
  return log_sum_exp(terms) / s;
}

namespace {

// log(tanh(a/2)) = log1p(-e^{-a}) - log1p(e^{-a}), stable for all a > 0.
double log_tanh_half(double a) {
  const double e = std::exp(-a);
  return std::log1p(-e) - std::log1p(e);
}

// Moments of the privacy loss of a discrete Laplace shift.  Outcomes group
// into d+1 likelihood-ratio classes: loss -ad for x <= 0, a(2x - d) for
// 0 < x < d, and ad for x >= d, with x distributed as the shifted copy.
struct DlapMoments {
  double m1, m2, m3;
};

DlapMoments dlap_shift_moments(double a, std::int64_t d) {
  const double ad = a * static_cast<double>(d);
  // m1 has the closed form a d - (1 - e^{-ad})/sinhc(a).
  DlapMoments m{ad + std::expm1(-ad) / sinhc(a), 0.0, 0.0};
  const double edge = 1.0 / (1.0 + std::exp(-a));  // mass of each saturated class
  m.m2 = (std::exp(-ad) + 1.0) * edge * ad * ad;
  m.m3 = (1.0 - std::exp(-ad)) * edge * ad * ad * ad;
  const double t = std::tanh(a / 2.0);
  for (std::int64_t x = 1; x < d; ++x) {
    const double mass = t * std::exp(a * static_cast<double>(x - d));
    const double loss = a * static_cast<double>(2 * x - d);
    m.m2 += mass * loss * loss;
    m.m3 += mass * loss * loss * loss;
  }
  return m;
}

}  // namespace

double rdp_discrete_laplace_shift(double a, std::int64_t d, RenyiOrder order) {
  require_positive(a, "a");
  if (d < 0) throw std::domain_error("d must be >= 0");
  if (d == 0) return 0.0;
  const double dd = static_cast<double>(d);
  if (order.is_kl()) {
    return a * dd + std::expm1(-a * dd) / sinhc(a);
  }
  const double s = order.alpha() - 1.0;
  if (s < expansion_threshold(a * dd)) {
    const DlapMoments m = dlap_shift_moments(a, d);
    return curve_from_moments(m.m1, m.m2, m.m3, s);
  }
  const double alpha = order.alpha();
  // Three regimes of the bilateral sum: a geometric left tail, the d+1 points
  // between the centers (ratio e^{a(2 alpha - 1)}), and a geometric right
  // tail.  All positive, so a plain log-sum-exp combines them.  The tail
  // weight tanh(a/2)/(e^a - 1) collapses to 1/(e^a + 1), which keeps every
  // log here O(1) instead of O(log a) and matters once the quotient below
  // divides by a small alpha - 1.
  const double b = a * (2.0 * alpha - 1.0);
  const double edge_weight = -log1p_exp(a);
  const double mid_weight = b <= 1.0
                                ? std::log(std::tanh(a / 2.0) / std::expm1(b))
                                : log_tanh_half(a) - log_expm1(b);
  const std::array<LogTerm, 3> terms{{
      {edge_weight, -a * alpha * dd},
      {mid_weight, -a * alpha * dd + log_expm1(b * (dd + 1.0))},
      {edge_weight, a * s * dd},
  }};
  return log_sum_exp(terms) / s;
}

double rdp_discrete_laplace(double eps, std::int64_t delta, RenyiOrder order) {
  require_positive(eps, "eps");
  if (delta < 1) throw std::domain_error("delta must be >= 1");
  return rdp_discrete_laplace_shift(eps / static_cast<double>(delta), delta, order);
}

double rdp_krr(double eps, int k, RenyiOrder order) {
  require_positive(eps, "eps");
  if (k < 2) throw std::domain_error("k must be >= 2");
  const double log_denom =
      log_sum_exp(std::array<LogTerm, 2>{{{0.0, eps}, {std::log(k - 1.0), 0.0}}});
  if (order.is_kl()) {
    return eps / (1.0 + k / std::expm1(eps));  // eps (e^eps-1)/(e^eps-1+k)
  }
  const double s = order.alpha() - 1.0;
  if (s < expansion_threshold(eps)) {
    const double p = std::exp(eps - log_denom);
    const double q = std::exp(-log_denom);
    const double m1 = (p - q) * eps;
    const double m2 = (p + q) * eps * eps;
    const double m3 = (p - q) * eps * eps * eps;
    return curve_from_moments(m1, m2, m3, s);
  }
  const double alpha = order.alpha();
  if (k == 2) {
    const std::array<LogTerm, 2> terms{{{0.0, alpha * eps}, {0.0, -s * eps}}};
    return (log_sum_exp(terms) - log_denom) / s;
  }
  const std::array<LogTerm, 3> terms{{
      {0.0, alpha * eps},
      {0.0, -s * eps},
      {std::log(k - 2.0), 0.0},
  }};
  return (log_sum_exp(terms) - log_denom) / s;
}

double rdp_rappor(double eps, RenyiOrder order) {
  require_positive(eps, "eps");
  // Only two coordinates of the one-hot encoding differ between neighboring
  // inputs, and each is a binary randomized response at eps/2.
  return 2.0 * rdp_generic_dp(eps / 2.0, order);
}

namespace {

struct BrWindow {
  double log_w0, log_w1;  // base-distribution masses of the two ratio atoms
  double l0, l1;          // log ratios: -t and eta - t
};

BrWindow br_window(double eta, double t) {
  const double lem1_eta = log_expm1(eta);
  return BrWindow{
      t + log_expm1(eta - t) - lem1_eta,
      log_expm1(t) - lem1_eta,
      -t,
      eta - t,
  };
}

double br_window_kl(const BrWindow& w) {
  const double p0 = std::exp(w.log_w0 + w.l0);
  const double p1 = std::exp(w.log_w1 + w.l1);
  return p0 * w.l0 + p1 * w.l1;
}

double br_window_curve(const BrWindow& w, double alpha) {
  const double s = alpha - 1.0;
  if (s < expansion_threshold(w.l1 - w.l0)) {
    const double p0 = std::exp(w.log_w0 + w.l0);
    const double p1 = std::exp(w.log_w1 + w.l1);
    const double m1 = p0 * w.l0 + p1 * w.l1;
    const double m2 = p0 * w.l0 * w.l0 + p1 * w.l1 * w.l1;
    const double m3 = p0 * w.l0 * w.l0 * w.l0 + p1 * w.l1 * w.l1 * w.l1;
    return curve_from_moments(m1, m2, m3, s);
  }
  const std::array<LogTerm, 2> terms{{
      {w.log_w0, w.l0 * alpha},
      {w.log_w1, w.l1 * alpha},
  }};
  return log_sum_exp(terms) / s;
}

}  // namespace

double rdp_br_at_t(double eta, double t, RenyiOrder order) {
  require_positive(eta, "eta");
  if (!(t >= 0.0 && t <= eta)) {
    throw std::domain_error("t must lie in [0, eta]");
  }
  if (t == 0.0 || t == eta) return 0.0;
  const BrWindow w = br_window(eta, t);
  if (order.is_kl()) return br_window_kl(w);
  return br_window_curve(w, order.alpha());
}

double br_optimal_t(double eta, double alpha) {
  require_positive(eta, "eta");
  if (!(alpha > 1)) throw std::domain_error("alpha must be > 1");
  const double s = alpha - 1.0;
  return std::log(alpha) - std::log(s) + eta + log_expm1(s * eta) -
         log_expm1(alpha * eta);
}

double br_kl_optimal_t(double eta) {
  require_positive(eta, "eta");
  // eta - log((e^eta - 1)/eta), with (e^eta - 1)/eta = e^{eta/2} sinhc(eta/2).
  return eta / 2.0 - log_sinhc(eta / 2.0);
}

double rdp_br(double eta, RenyiOrder order) {
  require_positive(eta, "eta");
  if (order.is_kl()) {
    // eta/(e^eta - 1) + log((e^eta - 1)/eta) - 1 in overflow-free form.
    const double half = eta / 2.0;
    return std::exp(-half) / sinhc(half) + half + log_sinhc(half) - 1.0;
  }
  const double alpha = order.alpha();
  const double s = alpha - 1.0;
  if (s < expansion_threshold(eta)) {
    return br_window_curve(br_window(eta, br_optimal_t(eta, alpha)), alpha);
  }
  const double log_alpha_ratio = std::log(alpha) - std::log(s);
  const double log_num =
      alpha * log_expm1(alpha * eta) +
      (1.0 - alpha) * (log_alpha_ratio + eta + log_expm1(s * eta));
  return (log_num - std::log(alpha) - log_expm1(eta)) / s;
}

RdpCurve::RdpCurve(Mechanism mechanism) : mechanism_(std::move(mechanism)) {
  validate(mechanism_);
  kl_ = (*this)(RenyiOrder::kl());
  cap_ = privacy_cap(mechanism_);
}

double RdpCurve::operator()(RenyiOrder order) const {
  return std::visit(
      [order](const auto& m) -> double {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, GenericDp>) {
          return rdp_generic_dp(m.eps, order);
        } else if constexpr (std::is_same_v<T, Laplace>) {
          return rdp_laplace(m.eps, order);
        } else if constexpr (std::is_same_v<T, DiscreteLaplace>) {
          return rdp_discrete_laplace(m.eps, m.delta, order);
        } else if constexpr (std::is_same_v<T, Krr>) {
          return rdp_krr(m.eps, m.k, order);
        } else if constexpr (std::is_same_v<T, Rappor>) {
          return rdp_rappor(m.eps, order);
        } else {
          static_assert(std::is_same_v<T, BoundedRange>);
          return rdp_br(m.eta, order);
        }
      },
      mechanism_);
}

}  // namespace zcdp
