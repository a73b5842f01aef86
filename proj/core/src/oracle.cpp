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

#include "zcdp/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <tuple>

#include "zcdp/special_functions.hpp"

namespace zcdp {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kEps = std::numeric_limits<double>::epsilon();

void require_positive(double value, const char* what) {
  if (!(value > 0) || !std::isfinite(value)) {
    throw std::domain_error(std::string(what) + " must be positive and finite");
  }
}

double log_tanh_half(double a) {
  const double e = std::exp(-a);
  return std::log1p(-e) - std::log1p(e);
}

// Floating-point noise of a log-sum-exp over terms whose exponents were
// formed with a handful of multiplies: the exponent error eps*|x| dominates.
double lse_relative_noise(double max_abs_exponent) {
  return kEps * (8.0 + 4.0 * max_abs_exponent);
}

}  // namespace

DiscreteDist DiscreteDist::from_probabilities(std::span<const double> masses) {
  if (masses.empty()) throw std::domain_error("empty distribution");
  std::vector<double> logs(masses.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < masses.size(); ++i) {
    if (!(masses[i] >= 0)) throw std::domain_error("negative mass");
    sum += masses[i];
    logs[i] = masses[i] > 0 ? std::log(masses[i]) : -kInf;
  }
  if (std::abs(sum - 1.0) > 1e-12) {
    throw std::domain_error("masses do not sum to 1");
  }
  return DiscreteDist(std::move(logs));
}

DiscreteDist DiscreteDist::from_log_masses(std::vector<double> log_masses) {
  if (log_masses.empty()) throw std::domain_error("empty distribution");
  const double total = log_sum_exp(std::span<const double>(log_masses));
  if (std::abs(std::expm1(total)) > 1e-12) {
    throw std::domain_error("masses do not sum to 1");
  }
  return DiscreteDist(std::move(log_masses));
}

double DiscreteDist::mass(std::size_t i) const {
  const double lm = log_mass_[i];
  return lm == -kInf ? 0.0 : std::exp(lm);
}

OracleResult renyi_discrete(const DiscreteDist& p, const DiscreteDist& q,
                            RenyiOrder order) {
  if (p.size() != q.size()) {
    throw std::domain_error("support mismatch");
  }
  if (order.is_kl()) {
    double sum = 0.0, comp = 0.0, fp_noise = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
      const double lp = p.log_mass(i);
      if (lp == -kInf) continue;
      const double lq = q.log_mass(i);
      if (lq == -kInf) {
        throw std::domain_error("not absolutely continuous");
      }
      const double mass = std::exp(lp);
      const double term = mass * (lp - lq);
      const double y = term - comp;
      const double next = sum + y;
      comp = (next - sum) - y;
      sum = next;
      fp_noise += kEps * (4.0 * std::abs(term) +
                          2.0 * mass * (std::abs(lp) + std::abs(lq)));
    }
    return {sum, fp_noise + 4.0 * kEps * std::abs(sum)};
  }
  const double alpha = order.alpha();
  std::vector<double> exponents;
  exponents.reserve(p.size());
  double max_abs = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double lp = p.log_mass(i);
    if (lp == -kInf) continue;  // p^alpha vanishes
    const double lq = q.log_mass(i);
    if (lq == -kInf) {
      throw std::domain_error("not absolutely continuous");
    }
    const double x = alpha * lp + (1.0 - alpha) * lq;
    exponents.push_back(x);
    max_abs = std::max(max_abs, std::abs(x));
  }
  const double log_sum = log_sum_exp(std::span<const double>(exponents));
  const double value = log_sum / (alpha - 1.0);
  const double error =
      lse_relative_noise(max_abs) / (alpha - 1.0) + 4.0 * kEps * std::abs(value);
  return {value, error};
}

OracleResult renyi_discrete_laplace(double a, std::int64_t d, RenyiOrder order,
                                    double tol) {
  require_positive(a, "a");
  require_positive(tol, "tol");
  if (d < 0) throw std::domain_error("d must be >= 0");
  if (d == 0) return {0.0, 0.0};
  const double alpha = order.is_kl() ? 1.0 : order.alpha();
  const double dd = static_cast<double>(d);
  const double ltanh = log_tanh_half(a);
  const double n_real =
      std::ceil((std::log(1.0 / tol) + a * alpha * dd + std::abs(ltanh)) / a) + 8;
  if (!(n_real < 2e7)) {
    throw std::domain_error("truncation window too large for this tolerance");
  }
  const auto n = static_cast<std::int64_t>(n_real);
  const double log_geom = -std::log1p(-std::exp(-a));  // log 1/(1 - e^{-a})

  if (order.is_kl()) {
    double sum = 0.0, comp = 0.0, fp_noise = 0.0;
    for (std::int64_t x = -n; x <= d + n; ++x) {
      const double dist_p = std::abs(static_cast<double>(x - d));
      const double dist_q = std::abs(static_cast<double>(x));
      const double mass = std::exp(ltanh - a * dist_p);
      const double term = mass * a * (dist_q - dist_p);
      const double y = term - comp;
      const double next = sum + y;
      comp = (next - sum) - y;
      sum = next;
      fp_noise += kEps * 6.0 * std::abs(term);
    }
    // |log ratio| <= a d on the dropped tails; doubled for headroom.
    const double tail_mass =
        std::exp(ltanh - a * (n_real + 1 + dd) + log_geom) +
        std::exp(ltanh - a * (n_real + 1) + log_geom);
    return {sum, 2.0 * a * dd * tail_mass + fp_noise + 4.0 * kEps * std::abs(sum)};
  }

  // 80-bit accumulation: the exponents reach ~|log tol| + alpha eps, and at
  // alpha near 1 every digit lost here is divided by alpha - 1.
  const long double la = a;
  const long double lalpha = alpha;
  const long double ltanh_l =
      std::log1p(-std::exp(-la)) - std::log1p(std::exp(-la));
  std::vector<long double> exponents;
  exponents.reserve(static_cast<std::size_t>(2 * n + d + 1));
  long double max_exponent = -std::numeric_limits<long double>::infinity();
  double max_abs = 0.0;
  for (std::int64_t x = -n; x <= d + n; ++x) {
    const long double dist_p = std::abs(static_cast<long double>(x - d));
    const long double dist_q = std::abs(static_cast<long double>(x));
    const long double e = ltanh_l - la * (lalpha * dist_p + (1.0L - lalpha) * dist_q);
    exponents.push_back(e);
    max_exponent = std::max(max_exponent, e);
    max_abs = std::max(max_abs, std::abs(static_cast<double>(e)));
  }
  long double sum = 0, comp = 0;
  for (const long double e : exponents) {
    const long double term = std::exp(e - max_exponent);
    const long double y = term - comp;
    const long double next = sum + y;
    comp = (next - sum) - y;
    sum = next;
  }
  const double log_sum = static_cast<double>(max_exponent + std::log(sum));
  const double log_tail_left = ltanh - a * alpha * dd - a * (n_real + 1) + log_geom;
  const double log_tail_right =
      ltanh + a * (alpha - 1.0) * dd - a * (n_real + 1) + log_geom;
  const double tail_rel =
      std::exp(log_sum_exp(std::array<double, 2>{log_tail_left, log_tail_right}) -
               log_sum);
  constexpr double kLongDoubleEps = 1.1e-19;
  const double fp_noise = kLongDoubleEps * (16.0 + 4.0 * max_abs);
  const double value = log_sum / (alpha - 1.0);
  // The geometric tail formula equals the dropped mass exactly; double it so
  // the report is a bound rather than an estimate.
  const double error =
      (2.0 * tail_rel + fp_noise) / (alpha - 1.0) + 4.0 * kEps * std::abs(value);
  return {value, error};
}

namespace {

// --- adaptive Simpson ------------------------------------------------------

struct QuadAccum {
  double error = 0.0;
  long evals = 0;
};

double simpson_slice(double h, double fa, double fm, double fb) {
  return h / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double m, double b, double fa, double fm, double fb,
                        double whole, double tol, int depth, QuadAccum& accum) {
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  accum.evals += 2;
  const double left = simpson_slice(m - a, fa, flm, fm);
  const double right = simpson_slice(b - m, fm, frm, fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) {
    accum.error += std::abs(delta) / 15.0 + kEps * (std::abs(left) + std::abs(right));
    return left + right + delta / 15.0;
  }
  return adaptive_simpson(f, a, lm, m, fa, flm, fm, left, tol / 2.0, depth - 1,
                          accum) +
         adaptive_simpson(f, m, rm, b, fm, frm, fb, right, tol / 2.0, depth - 1,
                          accum);
}

double integrate_interval(const std::function<double(double)>& f, double a,
                          double b, double tol, QuadAccum& accum) {
  const double m = 0.5 * (a + b);
  const double fa = f(a);
  const double fm = f(m);
  const double fb = f(b);
  accum.evals += 3;
  const double whole = simpson_slice(b - a, fa, fm, fb);
  return adaptive_simpson(f, a, m, b, fa, fm, fb, whole, tol, 48, accum);
}

// One smooth piece of the blended integrand, integrated in units of its own
// peak so that exponents far beyond double range stay finite.
struct ScaledSegment {
  double log_value = -kInf;
  double log_error = -kInf;
};

ScaledSegment integrate_segment_scaled(const std::function<double(double)>& h,
                                       double a, double b, double log_tol_abs) {
  double peak = -kInf;
  for (int i = 0; i <= 8; ++i) {
    peak = std::max(peak, h(a + (b - a) * i / 8.0));
  }
  if (peak == -kInf) return {};
  if (peak + std::log(b - a) < log_tol_abs) {
    // The whole segment is below the tolerance; charge it to the error.
    ScaledSegment out;
    out.log_error = peak + std::log(b - a);
    return out;
  }
  const auto g = [&h, peak](double x) {
    const double v = h(x) - peak;
    return v < -745.0 ? 0.0 : std::exp(v);
  };
  // Floor keeps the recursion from chasing targets below double noise.
  const double tol_scaled =
      std::max(std::exp(std::min(log_tol_abs - peak, 0.0)),
               1e-17 * std::max(1.0, b - a));
  QuadAccum accum;
  const double integral = integrate_interval(g, a, b, tol_scaled, accum);
  ScaledSegment out;
  if (integral > 0) out.log_value = peak + std::log(integral);
  const double err = 4.0 * accum.error + kEps * (1.0 + std::abs(integral));
  out.log_error = peak + std::log(err);
  return out;
}

// Per-unit slope of `f` beyond `x`, requiring the three probe points to be
// collinear; widens the probe until they are or gives up.
struct TailSlope {
  double start;   // abscissa the tail formula is anchored at
  double slope;   // strictly negative
};

TailSlope find_affine_tail(const std::function<double(double)>& f, double start,
                           double direction) {
  double x = start;
  for (int tries = 0; tries < 10000; ++tries) {
    const double f0 = f(x);
    const double f1 = f(x + direction);
    const double f2 = f(x + 2.0 * direction);
    const double slope = f1 - f0;
    const double curvature = f2 - 2.0 * f1 + f0;
    if (slope < -1e-12 &&
        std::abs(curvature) <= 1e-6 * (std::abs(slope) + 1e-6)) {
      return {x, slope};
    }
    x += direction;
  }
  throw std::domain_error("no affine exponential tail found; not integrable");
}

std::vector<double> sorted_unique(std::vector<double> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return points;
}

OracleResult renyi_continuous_kl(const ContinuousDensityPair& pair, double tol) {
  const auto integrand = [&pair](double x) {
    const double lp = pair.log_p(x);
    if (lp < -745.0) return 0.0;
    return std::exp(lp) * (lp - pair.log_q(x));
  };
  std::vector<double> kinks = sorted_unique(pair.singular_points);
  if (kinks.empty()) kinks.push_back(0.0);
  double left = kinks.front() - 1.0;
  double right = kinks.back() + 1.0;

  // Tail of |p (log p - log q)|: with affine log densities of slopes sp, sq
  // past the window, the integral from R is e^{lp(R)} (C/|sp| + |sp-sq|/sp^2).
  const auto tail_bound = [&pair](double anchor, double direction) {
    const TailSlope p_tail = find_affine_tail(pair.log_p, anchor, direction);
    const TailSlope q_tail = find_affine_tail(pair.log_q, anchor, direction);
    const double start = direction < 0
                             ? std::min(p_tail.start, q_tail.start)
                             : std::max(p_tail.start, q_tail.start);
    const double sp = std::abs(p_tail.slope);
    const double ratio0 = std::abs(pair.log_p(start) - pair.log_q(start));
    const double growth = std::abs(p_tail.slope - q_tail.slope);
    const double lp0 = pair.log_p(start);
    const double bound =
        lp0 < -745.0 ? 0.0 : std::exp(lp0) * (ratio0 / sp + growth / (sp * sp));
    return std::pair<double, double>(start, bound);
  };

  double tail_total = 0.0;
  for (double direction : {-1.0, 1.0}) {
    double anchor = direction < 0 ? left : right;
    double bound = kInf;
    for (int pass = 0; pass < 64; ++pass) {
      std::tie(anchor, bound) = tail_bound(anchor, direction);
      if (bound <= tol / 10.0) break;
      anchor += direction * 8.0;
    }
    tail_total += bound;
    if (direction < 0) {
      left = std::min(left, anchor);
    } else {
      right = std::max(right, anchor);
    }
  }

  std::vector<double> cuts;
  cuts.push_back(left);
  for (double k : kinks) {
    if (k > left && k < right) cuts.push_back(k);
  }
  cuts.push_back(right);

  double value = 0.0;
  QuadAccum accum;
  const double seg_tol =
      std::max(tol / (10.0 * static_cast<double>(cuts.size())), 1e-16);
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    value += integrate_interval(integrand, cuts[i], cuts[i + 1], seg_tol, accum);
  }
  return {value, 4.0 * accum.error + tail_total + 8.0 * kEps * (1.0 + std::abs(value))};
}

}  // namespace

OracleResult renyi_continuous(const ContinuousDensityPair& pair,
                              RenyiOrder order, double tol) {
  require_positive(tol, "tol");
  if (!pair.log_p || !pair.log_q) {
    throw std::domain_error("density pair must provide both log densities");
  }
  if (order.is_kl()) return renyi_continuous_kl(pair, tol);

  const double alpha = order.alpha();
  const auto blended = [&pair, alpha](double x) {
    return alpha * pair.log_p(x) + (1.0 - alpha) * pair.log_q(x);
  };
  std::vector<double> kinks = sorted_unique(pair.singular_points);
  if (kinks.empty()) kinks.push_back(0.0);

  TailSlope left_tail = find_affine_tail(blended, kinks.front() - 1.0, -1.0);
  TailSlope right_tail = find_affine_tail(blended, kinks.back() + 1.0, 1.0);

  const auto log_tail = [&blended](const TailSlope& t) {
    return blended(t.start) - std::log(-t.slope);
  };

  // Coarse scan for the integral's magnitude, used to size tails and
  // per-segment tolerances; the reported error bound is recomputed from the
  // actual accumulations afterwards.
  const auto rough_log_integral = [&]() {
    std::vector<double> logs;
    std::vector<double> cuts;
    cuts.push_back(left_tail.start);
    for (double k : kinks) {
      if (k > left_tail.start && k < right_tail.start) cuts.push_back(k);
    }
    cuts.push_back(right_tail.start);
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
      const double a = cuts[i], b = cuts[i + 1];
      double peak = -kInf;
      for (int j = 0; j <= 16; ++j) {
        peak = std::max(peak, blended(a + (b - a) * j / 16.0));
      }
      if (peak > -kInf) logs.push_back(peak + std::log(b - a));
    }
    logs.push_back(log_tail(left_tail));
    logs.push_back(log_tail(right_tail));
    return log_sum_exp(std::span<const double>(logs));
  };
  const double log_rough = rough_log_integral();

  // Push each anchor out until its analytic tail is below tol/10 of the whole.
  const double log_target = log_rough + std::log(tol / 10.0);
  for (TailSlope* t : {&left_tail, &right_tail}) {
    const double direction = t == &left_tail ? -1.0 : 1.0;
    for (int pass = 0; pass < 8 && log_tail(*t) > log_target; ++pass) {
      const double deficit = log_tail(*t) - log_target;
      const double shift = std::ceil(deficit / -t->slope) + 1.0;
      *t = find_affine_tail(blended, t->start + direction * shift, direction);
    }
  }

  std::vector<double> cuts;
  cuts.push_back(left_tail.start);
  for (double k : kinks) {
    if (k > left_tail.start && k < right_tail.start) cuts.push_back(k);
  }
  cuts.push_back(right_tail.start);

  const double log_seg_tol =
      log_rough + std::log(tol / 10.0) - std::log(static_cast<double>(cuts.size()));
  std::vector<double> segment_logs;
  std::vector<double> error_logs;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const ScaledSegment seg =
        integrate_segment_scaled(blended, cuts[i], cuts[i + 1], log_seg_tol);
    if (seg.log_value > -kInf) segment_logs.push_back(seg.log_value);
    if (seg.log_error > -kInf) error_logs.push_back(seg.log_error);
  }
  error_logs.push_back(log_tail(left_tail));
  error_logs.push_back(log_tail(right_tail));
  if (segment_logs.empty()) {
    throw std::domain_error("integrand vanished everywhere; not integrable");
  }
  const double log_integral = log_sum_exp(std::span<const double>(segment_logs));
  const double relative_error =
      std::exp(log_sum_exp(std::span<const double>(error_logs)) - log_integral) +
      64.0 * kEps;
  const double value = log_integral / (alpha - 1.0);
  return {value, relative_error / (alpha - 1.0) + 4.0 * kEps * std::abs(value)};
}

ContinuousDensityPair laplace_density_pair(double eps) {
  require_positive(eps, "eps");
  const double log_norm = std::log(eps / 2.0);
  return ContinuousDensityPair{
      [eps, log_norm](double x) { return -eps * std::abs(x - 1.0) + log_norm; },
      [eps, log_norm](double x) { return -eps * std::abs(x) + log_norm; },
      {0.0, 1.0},
  };
}

namespace {

DiscretePair generic_dp_pair(double eps) {
  const double log_denom = log1p_exp(eps);
  std::vector<double> lp{eps - log_denom, -log_denom};
  std::vector<double> lq{-log_denom, eps - log_denom};
  return {DiscreteDist::from_log_masses(std::move(lp)),
          DiscreteDist::from_log_masses(std::move(lq))};
}

// delta+1 likelihood-ratio classes of the shifted discrete Laplace pair:
// grouping outcomes with equal ratio leaves every Renyi divergence unchanged.
DiscretePair discrete_laplace_pair(double eps, std::int64_t delta) {
  const double a = eps / static_cast<double>(delta);
  const double ltanh = log_tanh_half(a);
  const double log_edge = -log1p_exp(-a);  // log 1/(1 + e^{-a})
  const double ad = a * static_cast<double>(delta);
  std::vector<double> lp(delta + 1), lq(delta + 1);
  lq[0] = log_edge;
  lp[0] = log_edge - ad;
  for (std::int64_t x = 1; x < delta; ++x) {
    lq[x] = ltanh - a * static_cast<double>(x);
    lp[x] = ltanh - a * static_cast<double>(delta - x);
  }
  lq[delta] = log_edge - ad;
  lp[delta] = log_edge;
  return {DiscreteDist::from_log_masses(std::move(lp)),
          DiscreteDist::from_log_masses(std::move(lq))};
}

DiscretePair krr_pair(double eps, int k) {
  const double log_denom = log_sum_exp(
      std::array<LogTerm, 2>{{{0.0, eps}, {std::log(k - 1.0), 0.0}}});
  std::vector<double> lp(k, -log_denom), lq(k, -log_denom);
  lp[0] = eps - log_denom;
  lq[1] = eps - log_denom;
  return {DiscreteDist::from_log_masses(std::move(lp)),
          DiscreteDist::from_log_masses(std::move(lq))};
}

DiscretePair rappor_pair(double eps, int d) {
  if (d > 16) {
    throw std::domain_error("brute-force oracle unsupported at this dimension");
  }
  const double half = eps / 2.0;
  const double log_keep = half - log1p_exp(half);
  const double log_flip = -log1p_exp(half);
  const std::size_t n = std::size_t{1} << d;
  std::vector<double> lp(n, 0.0), lq(n, 0.0);
  for (std::size_t y = 0; y < n; ++y) {
    for (int i = 0; i < d; ++i) {
      const bool bit = (y >> i) & 1;
      const bool hot1 = i == 0;  // one-hot encoding of input 1
      const bool hot2 = i == 1;  // ... and of input 2
      lp[y] += bit == hot1 ? log_keep : log_flip;
      lq[y] += bit == hot2 ? log_keep : log_flip;
    }
  }
  return {DiscreteDist::from_log_masses(std::move(lp)),
          DiscreteDist::from_log_masses(std::move(lq))};
}

DiscretePair bounded_range_pair(double eta, double t) {
  if (!(t >= 0 && t <= eta)) throw std::domain_error("t must lie in [0, eta]");
  if (t == 0.0 || t == eta) {
    // Degenerate window: both distributions collapse onto one outcome.
    std::vector<double> point{0.0, -kInf};
    if (t != 0.0) std::swap(point[0], point[1]);
    std::vector<double> copy = point;
    return {DiscreteDist::from_log_masses(std::move(point)),
            DiscreteDist::from_log_masses(std::move(copy))};
  }
  const double lem1_eta = log_expm1(eta);
  const double log_w0 = t + log_expm1(eta - t) - lem1_eta;
  const double log_w1 = log_expm1(t) - lem1_eta;
  std::vector<double> lp{log_w0 - t, log_w1 + eta - t};
  std::vector<double> lq{log_w0, log_w1};
  return {DiscreteDist::from_log_masses(std::move(lp)),
          DiscreteDist::from_log_masses(std::move(lq))};
}

}  // namespace

WorstCasePair mechanism_worst_pair(const Mechanism& mechanism,
                                   std::optional<double> br_t) {
  validate(mechanism);
  return std::visit(
      [&](const auto& m) -> WorstCasePair {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, GenericDp>) {
          return generic_dp_pair(m.eps);
        } else if constexpr (std::is_same_v<T, Laplace>) {
          return laplace_density_pair(m.eps);
        } else if constexpr (std::is_same_v<T, DiscreteLaplace>) {
          return discrete_laplace_pair(m.eps, m.delta);
        } else if constexpr (std::is_same_v<T, Krr>) {
          return krr_pair(m.eps, m.k);
        } else if constexpr (std::is_same_v<T, Rappor>) {
          return rappor_pair(m.eps, m.d);
        } else {
          static_assert(std::is_same_v<T, BoundedRange>);
          if (!br_t) {
            throw std::domain_error(
                "bounded-range worst pair needs the window offset t");
          }
          return bounded_range_pair(m.eta, *br_t);
        }
      },
      mechanism);
}

namespace {

class UniformSource {
 public:
  explicit UniformSource(std::uint64_t seed) : engine_(seed) {}
  // In [0, 1); engine and mapping both fully pinned down, so streams are
  // identical across platforms.
  double next() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

std::vector<double> random_base_distribution(int outcomes, UniformSource& rng) {
  std::vector<double> q(outcomes);
  double sum = 0.0;
  for (double& v : q) {
    v = std::exp(rng.next());
    sum += v;
  }
  for (double& v : q) v /= sum;
  return q;
}

}  // namespace

RatioBoundedPair random_bounded_ratio_pair(int outcomes, double width,
                                           std::uint64_t seed) {
  if (outcomes < 2) throw std::domain_error("outcomes must be >= 2");
  require_positive(width, "width");
  UniformSource rng(seed);
  std::vector<double> q = random_base_distribution(outcomes, rng);
  // p_i proportional to q_i e^{r_i}; renormalizing shifts every log ratio by
  // -log c with c a q-weighted mean of the e^{r_i}, so the ratios land in
  // [-t, -t + width] for a t inside [0, width].
  std::vector<double> p(outcomes);
  double c = 0.0;
  for (int i = 0; i < outcomes; ++i) {
    p[i] = q[i] * std::exp(rng.next() * width);
    c += p[i];
  }
  for (double& v : p) v /= c;
  return {DiscreteDist::from_probabilities(p),
          DiscreteDist::from_probabilities(q), std::log(c)};
}

DiscretePair random_pure_dp_pair(int outcomes, double eps, std::uint64_t seed) {
  if (outcomes < 2) throw std::domain_error("outcomes must be >= 2");
  require_positive(eps, "eps");
  UniformSource rng(seed);
  std::vector<double> q = random_base_distribution(outcomes, rng);
  std::vector<double> r(outcomes);
  for (double& v : r) v = (2.0 * rng.next() - 1.0) * eps;
  // Find the shift making the clamped ratios normalize: the total mass is
  // continuous and nondecreasing in s, crossing 1 inside [-2 eps, 2 eps].
  const auto total = [&](double s) {
    double sum = 0.0;
    for (int i = 0; i < outcomes; ++i) {
      sum += q[i] * std::exp(std::clamp(r[i] + s, -eps, eps));
    }
    return sum;
  };
  double lo = -2.0 * eps, hi = 2.0 * eps;
  for (int it = 0; it < 120; ++it) {
    const double mid = 0.5 * (lo + hi);
    (total(mid) < 1.0 ? lo : hi) = mid;
  }
  const double shift = 0.5 * (lo + hi);
  std::vector<double> p(outcomes);
  double sum = 0.0;
  std::size_t heaviest = 0;
  for (int i = 0; i < outcomes; ++i) {
    p[i] = q[i] * std::exp(std::clamp(r[i] + shift, -eps, eps));
    sum += p[i];
    if (q[i] > q[heaviest]) heaviest = i;
  }
  p[heaviest] += 1.0 - sum;  // residual ~1e-16, absorbed where it is smallest
  return {DiscreteDist::from_probabilities(p),
          DiscreteDist::from_probabilities(q)};
}

}  // namespace zcdp
