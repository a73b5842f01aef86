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

#ifndef ZCDP_TOOLS_FIGURE_H_
#define ZCDP_TOOLS_FIGURE_H_

#include <cstdint>
#include <string>
#include <vector>

namespace zcdp::tools {

// Shortest decimal that parses back to the same double.
std::string format_shortest(double value);

// 12 significant digits, the bound-printing format.
std::string format_sig12(double value);

struct FigureData {
  std::vector<double> eps;                      // the x grid
  std::vector<std::string> columns;             // column names, x excluded
  std::vector<std::vector<double>> values;      // values[c][i]
};

// rho(eps) for all six families over a log-spaced eps grid.
FigureData figure_data(double eps_min, double eps_max, int points,
                       std::int64_t dlaplace_delta, int krr_k);

// RFC-4180-style CSV: comma separated, LF line endings, header row,
// shortest round-trip decimals.
std::string figure_csv(const FigureData& data);

// Static SVG 1.1 log-log line chart of the same data; byte-stable for
// identical inputs.
std::string figure_svg(const FigureData& data);

}  // namespace zcdp::tools

#endif  // ZCDP_TOOLS_FIGURE_H_
