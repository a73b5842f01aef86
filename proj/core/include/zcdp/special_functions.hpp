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

#ifndef ZCDP_SPECIAL_FUNCTIONS_H_
#define ZCDP_SPECIAL_FUNCTIONS_H_

#include <span>
#include <vector>

namespace zcdp {

// sinh(x)/x with sinh(0)/0 := 1.  Strictly increasing on [0, inf) and >= 1.
// Requires x >= 0.
double sinhc(double x);

// log(sinh(x)/x); 0 at x = 0.  Evaluated as x - log(2x) + log1p(-e^{-2x})
// for large x, so it never overflows even where sinh(x) would.
// Requires x >= 0.
double log_sinhc(double x);

// One addend of a log-space sum: weight * value with both factors kept as
// logarithms.  A log_weight of 0 encodes a unit weight.
struct LogTerm {
  double log_weight;
  double log_value;
};

// log(sum_i exp(t.log_weight + t.log_value)) with the maximum exponent
// factored out.  Requires a non-empty list; -infinity entries are allowed
// and contribute zero.
double log_sum_exp(std::span<const LogTerm> terms);
double log_sum_exp(std::span<const double> log_terms);

// log(e^x - 1) for x > 0 without overflow or loss near zero.
double log_expm1(double x);

// log(1 + e^x), stable for any x.
double log1p_exp(double x);

// e^x - 1 - x summed as x^2/2! + x^3/3! + ... for small |x|.
double expm1_minus_x(double x);

}  // namespace zcdp

#endif  // ZCDP_SPECIAL_FUNCTIONS_H_
