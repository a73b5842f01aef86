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

#include "figure.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "zcdp/zcdp_bounds.hpp"

namespace zcdp::tools {

std::string format_shortest(double value) {
  char buf[32];
  const auto result = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, result.ptr);
}

std::string format_sig12(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%#.12g", value);  // keep trailing zeros
  return buf;
}

FigureData figure_data(double eps_min, double eps_max, int points,
                       std::int64_t dlaplace_delta, int krr_k) {
  if (!(eps_min > 0 && eps_max > eps_min && eps_max <= 20)) {
    throw std::invalid_argument("eps range must satisfy 0 < eps_min < eps_max <= 20");
  }
  if (points < 2) throw std::invalid_argument("points must be >= 2");
  FigureData data;
  data.columns = {"generic", "laplace", "dlaplace", "krr", "rappor", "br"};
  data.values.resize(data.columns.size());
  const double lo = std::log(eps_min);
  const double hi = std::log(eps_max);
  for (int i = 0; i < points; ++i) {
    const double eps = i == 0 ? eps_min
                     : i == points - 1
                         ? eps_max
                         : std::exp(lo + (hi - lo) * i / (points - 1));
    data.eps.push_back(eps);
    data.values[0].push_back(zcdp_generic(eps).rho);
    data.values[1].push_back(zcdp_laplace(eps).rho);
    data.values[2].push_back(zcdp_discrete_laplace(eps, dlaplace_delta).rho);
    data.values[3].push_back(zcdp_krr(eps, krr_k).rho);
    data.values[4].push_back(zcdp_rappor(eps).rho);
    data.values[5].push_back(zcdp_br(eps).rho);
  }
  return data;
}

std::string figure_csv(const FigureData& data) {
  std::ostringstream out;
  out << "eps";
  for (const std::string& name : data.columns) out << ',' << name;
  out << '\n';
  for (std::size_t i = 0; i < data.eps.size(); ++i) {
    out << format_shortest(data.eps[i]);
    for (const auto& column : data.values) {
      out << ',' << format_shortest(column[i]);
    }
    out << '\n';
  }
  return out.str();
}

namespace {

constexpr int kWidth = 720;
constexpr int kHeight = 480;
constexpr int kMarginLeft = 64;
constexpr int kMarginRight = 150;
constexpr int kMarginTop = 24;
constexpr int kMarginBottom = 48;

const char* kPalette[6] = {"#1f77b4", "#d62728", "#2ca02c",
                           "#9467bd", "#ff7f0e", "#8c564b"};

std::string fixed2(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

}  // namespace

std::string figure_svg(const FigureData& data) {
  double y_min = 1e300, y_max = -1e300;
  for (const auto& column : data.values) {
    for (double v : column) {
      if (v > 0) {
        y_min = std::min(y_min, v);
        y_max = std::max(y_max, v);
      }
    }
  }
  const double x_lo = std::log10(data.eps.front());
  const double x_hi = std::log10(data.eps.back());
  const double y_lo = std::log10(y_min);
  const double y_hi = std::log10(y_max);
  const double plot_w = kWidth - kMarginLeft - kMarginRight;
  const double plot_h = kHeight - kMarginTop - kMarginBottom;
  const auto x_of = [&](double eps) {
    return kMarginLeft + (std::log10(eps) - x_lo) / (x_hi - x_lo) * plot_w;
  };
  const auto y_of = [&](double v) {
    return kMarginTop + (y_hi - std::log10(v)) / (y_hi - y_lo) * plot_h;
  };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
      << kWidth << "\" height=\"" << kHeight << "\">\n";
  svg << "<rect width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" fill=\"white\"/>\n";

  // Decade grid lines with labels.
  for (int p = static_cast<int>(std::ceil(x_lo)); p <= std::floor(x_hi); ++p) {
    const double x = kMarginLeft + (p - x_lo) / (x_hi - x_lo) * plot_w;
    svg << "<line x1=\"" << fixed2(x) << "\" y1=\"" << kMarginTop << "\" x2=\""
        << fixed2(x) << "\" y2=\"" << kMarginTop + plot_h
        << "\" stroke=\"#dddddd\"/>\n";
    svg << "<text x=\"" << fixed2(x) << "\" y=\"" << kMarginTop + plot_h + 18
        << "\" font-size=\"11\" text-anchor=\"middle\">1e" << p << "</text>\n";
  }
  for (int p = static_cast<int>(std::ceil(y_lo)); p <= std::floor(y_hi); ++p) {
    const double y = kMarginTop + (y_hi - p) / (y_hi - y_lo) * plot_h;
    svg << "<line x1=\"" << kMarginLeft << "\" y1=\"" << fixed2(y) << "\" x2=\""
        << kMarginLeft + plot_w << "\" y2=\"" << fixed2(y)
        << "\" stroke=\"#dddddd\"/>\n";
    svg << "<text x=\"" << kMarginLeft - 6 << "\" y=\"" << fixed2(y + 4)
        << "\" font-size=\"11\" text-anchor=\"end\">1e" << p << "</text>\n";
  }
  svg << "<rect x=\"" << kMarginLeft << "\" y=\"" << kMarginTop << "\" width=\""
      << fixed2(plot_w) << "\" height=\"" << fixed2(plot_h)
      << "\" fill=\"none\" stroke=\"#333333\"/>\n";

  for (std::size_t c = 0; c < data.columns.size(); ++c) {
    svg << "<polyline fill=\"none\" stroke=\"" << kPalette[c]
        << "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < data.eps.size(); ++i) {
      if (i > 0) svg << ' ';
      svg << fixed2(x_of(data.eps[i])) << ',' << fixed2(y_of(data.values[c][i]));
    }
    svg << "\"/>\n";
    const double ly = kMarginTop + 16 + 18 * static_cast<double>(c);
    svg << "<line x1=\"" << kMarginLeft + plot_w + 10 << "\" y1=\""
        << fixed2(ly - 4) << "\" x2=\"" << kMarginLeft + plot_w + 34
        << "\" y2=\"" << fixed2(ly - 4) << "\" stroke=\"" << kPalette[c]
        << "\" stroke-width=\"1.5\"/>\n";
    svg << "<text x=\"" << kMarginLeft + plot_w + 40 << "\" y=\"" << fixed2(ly)
        << "\" font-size=\"12\">" << data.columns[c] << "</text>\n";
  }
  svg << "<text x=\"" << kMarginLeft + plot_w / 2 << "\" y=\"" << kHeight - 10
      << "\" font-size=\"12\" text-anchor=\"middle\">eps</text>\n";
  svg << "<text x=\"16\" y=\"" << kMarginTop + plot_h / 2
      << "\" font-size=\"12\" text-anchor=\"middle\" transform=\"rotate(-90 16 "
      << fixed2(kMarginTop + plot_h / 2) << ")\">rho</text>\n";
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace zcdp::tools
