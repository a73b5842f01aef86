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

#ifndef ZCDP_ACCOUNTANT_H_
#define ZCDP_ACCOUNTANT_H_

#include <string>
#include <vector>

#include "zcdp/mechanism.hpp"
#include "zcdp/rdp_curves.hpp"

namespace zcdp {

struct BudgetEntry {
  std::string label;
  ZcdpBound bound;
};

// An ordered privacy budget: zCDP composes additively, so the running total
// is just the sum of the entries' rho values.
struct BudgetLedger {
  std::vector<BudgetEntry> entries;
  double total = 0.0;
};

// Sums the entries in order.  Rejects an empty list.
BudgetLedger compose(std::vector<BudgetEntry> entries);

struct CurveRow {
  double alpha;
  double eps_hat;
  double eps_hat_over_alpha;
};

// `points` rows with alpha log-spaced in alpha - 1 across
// [alpha_min, alpha_max]; alpha_min must exceed 1.
std::vector<CurveRow> tabulate_curve(const RdpCurve& curve, double alpha_min,
                                     double alpha_max, int points);

}  // namespace zcdp

#endif  // ZCDP_ACCOUNTANT_H_
