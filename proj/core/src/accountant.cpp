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

#include "zcdp/accountant.hpp"

#include <cmath>
#include <stdexcept>

namespace zcdp {

BudgetLedger compose(std::vector<BudgetEntry> entries) {
  if (entries.empty()) {
    throw std::invalid_argument("compose: empty budget");
  }
  BudgetLedger ledger{std::move(entries), 0.0};
  for (const BudgetEntry& entry : ledger.entries) {
    ledger.total += entry.bound.rho;
  }
  return ledger;
}

std::vector<CurveRow> tabulate_curve(const RdpCurve& curve, double alpha_min,
                                     double alpha_max, int points) {
  if (!(alpha_min > 1.0) || !(alpha_max > alpha_min)) {
    throw std::invalid_argument("tabulate_curve: need 1 < alpha_min < alpha_max");
  }
  if (points < 1) throw std::invalid_argument("tabulate_curve: points must be >= 1");
  std::vector<CurveRow> rows;
  rows.reserve(points);
  const double lo = std::log(alpha_min - 1.0);
  const double hi = std::log(alpha_max - 1.0);
  for (int i = 0; i < points; ++i) {
    const double alpha = i == 0 ? alpha_min
                       : i == points - 1 && points > 1
                           ? alpha_max
                           : 1.0 + std::exp(lo + (hi - lo) * i / (points - 1));
    const double eps_hat = curve(RenyiOrder::of(alpha));
    rows.push_back({alpha, eps_hat, eps_hat / alpha});
  }
  return rows;
}

}  // namespace zcdp
