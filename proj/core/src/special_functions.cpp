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

#include "zcdp/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace zcdp {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}  // namespace

double sinhc(double x) {
  if (!(x >= 0)) {
    throw std::domain_error("sinhc: argument must be >= 0");
  }
  if (x < 1e-4) {
    // sinh(x)/x = 1 + x^2/6 + x^4/120 + O(x^6); the dropped term is < 1e-28.
    const double x2 = x * x;
    return 1.0 + x2 / 6.0 + x2 * x2 / 120.0;
  }
  return std::sinh(x) / x;
}

double log_sinhc(double x) {
  if (!(x >= 0)) {
    throw std::domain_error("log_sinhc: argument must be >= 0");
  }
  if (x < 1e-4) {
    const double x2 = x * x;
    return std::log1p(x2 / 6.0 + x2 * x2 / 120.0);
  }
  if (x > 20.0) {
    // sinh(x) = e^x (1 - e^{-2x}) / 2; sinh overflows near 710, this does not.
    return x - std::log(2.0 * x) + std::log1p(-std::exp(-2.0 * x));
  }
  return std::log(std::sinh(x) / x);
}

double log_sum_exp(std::span<const LogTerm> terms) {
  if (terms.empty()) {
    throw std::domain_error("log_sum_exp: empty term list");
  }
  double max_exponent = -kInf;
  for (const LogTerm& t : terms) {
    max_exponent = std::max(max_exponent, t.log_weight + t.log_value);
  }
  if (max_exponent == -kInf) return -kInf;
  if (max_exponent == kInf) return kInf;
  // Kahan-compensated accumulation of exp(e_i - max).
  double sum = 0.0;
  double comp = 0.0;
  for (const LogTerm& t : terms) {
    const double term = std::exp(t.log_weight + t.log_value - max_exponent);
    const double y = term - comp;
    const double next = sum + y;
    comp = (next - sum) - y;
    sum = next;
  }
  return max_exponent + std::log(sum);
}

double log_sum_exp(std::span<const double> log_terms) {
  if (log_terms.empty()) {
    throw std::domain_error("log_sum_exp: empty term list");
  }
  double max_exponent = -kInf;
  for (double e : log_terms) max_exponent = std::max(max_exponent, e);
  if (max_exponent == -kInf) return -kInf;
  if (max_exponent == kInf) return kInf;
  double sum = 0.0;
  double comp = 0.0;
  for (double e : log_terms) {
    const double term = std::exp(e - max_exponent);
    const double y = term - comp;
    const double next = sum + y;
    comp = (next - sum) - y;
    sum = next;
  }
  return max_exponent + std::log(sum);
}

double log_expm1(double x) {
  if (!(x > 0)) {
    throw std::domain_error("log_expm1: argument must be > 0");
  }
  if (x > 36.0) {
    return x + std::log1p(-std::exp(-x));
  }
  return std::log(std::expm1(x));
}

double log1p_exp(double x) {
  if (x > 0) return x + std::log1p(std::exp(-x));
  return std::log1p(std::exp(x));
}

double expm1_minus_x(double x) {
  if (std::abs(x) > 0.5) {
    return std::expm1(x) - x;
  }
  double term = x * x / 2.0;
  double sum = term;
  for (int i = 3; i < 40; ++i) {
    term *= x / i;
    sum += term;
    if (std::abs(term) < 1e-20 * std::abs(sum)) break;
  }
  return sum;
}

}  // namespace zcdp
