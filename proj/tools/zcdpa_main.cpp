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

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "figure.hpp"
#include "zcdp/accountant.hpp"
#include "zcdp/mechanism.hpp"
#include "zcdp/oracle.hpp"
#include "zcdp/rdp_curves.hpp"
#include "zcdp/verify.hpp"
#include "zcdp/zcdp_bounds.hpp"

namespace {

using zcdp::Mechanism;
using zcdp::RenyiOrder;
using zcdp::tools::format_shortest;
using zcdp::tools::format_sig12;

constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct MechanismFlags {
  std::string name;
  std::optional<double> eps;
  std::optional<double> eta;
  std::optional<std::int64_t> delta;
  std::optional<int> k;
  std::optional<int> d;
};

void add_mechanism_options(CLI::App* cmd, MechanismFlags& flags) {
  cmd->add_option("mechanism", flags.name,
                  "one of: generic, laplace, dlaplace, krr, rappor, br")
      ->required();
  cmd->add_option("--eps", flags.eps, "privacy budget (DP families)");
  cmd->add_option("--eta", flags.eta, "range width (br)");
  cmd->add_option("--delta", flags.delta, "integer sensitivity (dlaplace)");
  cmd->add_option("--k", flags.k, "alphabet size (krr)");
  cmd->add_option("--d", flags.d, "one-hot dimension (rappor)");
}

double require_eps(const MechanismFlags& flags) {
  if (!flags.eps) throw UsageError("--eps is required for " + flags.name);
  return *flags.eps;
}

Mechanism build_mechanism(const MechanismFlags& flags) {
  Mechanism mechanism;
  if (flags.name == "generic") {
    mechanism = zcdp::GenericDp{require_eps(flags)};
  } else if (flags.name == "laplace") {
    mechanism = zcdp::Laplace{require_eps(flags)};
  } else if (flags.name == "dlaplace") {
    mechanism = zcdp::DiscreteLaplace{require_eps(flags), flags.delta.value_or(1)};
  } else if (flags.name == "krr") {
    if (!flags.k) throw UsageError("--k is required for krr");
    mechanism = zcdp::Krr{require_eps(flags), *flags.k};
  } else if (flags.name == "rappor") {
    mechanism = zcdp::Rappor{require_eps(flags), flags.d.value_or(2)};
  } else if (flags.name == "br") {
    if (!flags.eta) throw UsageError("--eta is required for br");
    mechanism = zcdp::BoundedRange{*flags.eta};
  } else {
    throw UsageError("unknown mechanism '" + flags.name + "'");
  }
  try {
    zcdp::validate(mechanism);
  } catch (const std::domain_error& err) {
    throw UsageError(err.what());
  }
  return mechanism;
}

nlohmann::json mechanism_params_json(const Mechanism& mechanism) {
  nlohmann::json params;
  std::visit(
      [&params](const auto& m) {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, zcdp::BoundedRange>) {
          params["eta"] = m.eta;
        } else {
          params["eps"] = m.eps;
        }
        if constexpr (std::is_same_v<T, zcdp::DiscreteLaplace>) params["delta"] = m.delta;
        if constexpr (std::is_same_v<T, zcdp::Krr>) params["k"] = m.k;
        if constexpr (std::is_same_v<T, zcdp::Rappor>) params["d"] = m.d;
      },
      mechanism);
  return params;
}

// --- bound -------------------------------------------------------------

int run_bound(const MechanismFlags& flags, bool as_json) {
  const Mechanism mechanism = build_mechanism(flags);
  const zcdp::ZcdpBound bound = zcdp::zcdp_bound(mechanism);
  if (as_json) {
    nlohmann::json doc;
    doc["mechanism"] = zcdp::mechanism_name(mechanism);
    doc["params"] = mechanism_params_json(mechanism);
    doc["rho"] = bound.rho;
    doc["tight"] = bound.tight;
    doc["source"] = bound.source;
    std::cout << doc.dump() << '\n';
  } else {
    std::cout << format_sig12(bound.rho) << ' '
              << (bound.tight ? "tight" : "upper-bound") << ' ' << bound.source
              << '\n';
  }
  return 0;
}

// --- curve -------------------------------------------------------------

int run_curve(const MechanismFlags& flags, double alpha_min, double alpha_max,
              int points) {
  if (!(alpha_min > 1.0 && alpha_max > alpha_min && alpha_max <= 1e6)) {
    throw UsageError("alpha range must satisfy 1 < alpha-min < alpha-max <= 1e6");
  }
  const zcdp::RdpCurve curve(build_mechanism(flags));
  std::cout << "alpha,eps_hat,eps_hat_over_alpha\n";
  for (const zcdp::CurveRow& row :
       zcdp::tabulate_curve(curve, alpha_min, alpha_max, points)) {
    std::cout << format_shortest(row.alpha) << ',' << format_shortest(row.eps_hat)
              << ',' << format_shortest(row.eps_hat_over_alpha) << '\n';
  }
  return 0;
}

// --- verify ------------------------------------------------------------

std::vector<Mechanism> standard_grid() {
  const double eps_grid[] = {0.05, 0.1, 0.5, 1.0, 2.0, 5.0, 10.0};
  std::vector<Mechanism> grid;
  for (double eps : eps_grid) grid.push_back(zcdp::GenericDp{eps});
  for (double eps : eps_grid) grid.push_back(zcdp::Laplace{eps});
  for (double eps : eps_grid) {
    for (std::int64_t delta : {1, 2, 3, 10, 100}) {
      grid.push_back(zcdp::DiscreteLaplace{eps, delta});
    }
  }
  for (double eps : eps_grid) {
    for (int k = 2; k <= 6; ++k) grid.push_back(zcdp::Krr{eps, k});
  }
  for (double eps : eps_grid) {
    for (int d : {2, 3, 8}) grid.push_back(zcdp::Rappor{eps, d});
  }
  for (double eps : eps_grid) grid.push_back(zcdp::BoundedRange{eps});
  // Alphabet sizes past the threshold, where the constant moves off the limit.
  grid.push_back(zcdp::Krr{1.0, 9});
  grid.push_back(zcdp::Krr{1.0, 20});
  grid.push_back(zcdp::Krr{2.0, 50});
  grid.push_back(zcdp::Krr{0.5, 8});
  return grid;
}

// Seeded random instances dominated by the worst-case curves.
zcdp::VerificationReport domination_report(bool bounded_range, double budget,
                                           int pairs, std::uint64_t seed) {
  zcdp::VerificationReport report;
  report.mechanism = bounded_range ? Mechanism(zcdp::BoundedRange{budget})
                                   : Mechanism(zcdp::GenericDp{budget});
  for (double alpha : {1.0, 2.0, 5.0}) {
    const RenyiOrder order = alpha == 1.0 ? RenyiOrder::kl() : RenyiOrder::of(alpha);
    const double cap = bounded_range
                           ? zcdp::rdp_br(budget, order)
                           : zcdp::rdp_generic_dp(budget, order);
    double worst = 0.0;
    for (int i = 0; i < pairs; ++i) {
      const int outcomes = 2 + i % 15;
      const std::uint64_t pair_seed = seed * 1000003ULL + static_cast<std::uint64_t>(i);
      zcdp::DiscretePair pair =
          bounded_range
              ? [&] {
                  auto bounded =
                      zcdp::random_bounded_ratio_pair(outcomes, budget, pair_seed);
                  return zcdp::DiscretePair{std::move(bounded.p), std::move(bounded.q)};
                }()
              : zcdp::random_pure_dp_pair(outcomes, budget, pair_seed);
    const double divergence = zcdp::renyi_discrete(pair.p, pair.q, order).value;
      worst = std::max(worst, divergence - cap);
    }
    zcdp::Claim claim;
    claim.name = (bounded_range ? std::string("random_width_pairs_dominated_alpha_")
                                : std::string("random_dp_pairs_dominated_alpha_")) +
                 format_shortest(alpha);
    claim.expected = 0.0;
    claim.observed = std::max(worst, 0.0);
    claim.tolerance = 1e-10;
    claim.pass = worst <= 1e-10;
    report.claims.push_back(claim);
  }
  return report;
}

int run_verify(const std::optional<MechanismFlags>& single, double alpha_max,
               double tol, std::uint64_t seed, int pairs) {
  std::vector<zcdp::VerificationReport> reports;
  if (single) {
    reports.push_back(zcdp::certify_tightness(build_mechanism(*single), alpha_max, tol));
  } else {
    for (const Mechanism& mechanism : standard_grid()) {
      reports.push_back(zcdp::certify_tightness(mechanism, alpha_max, tol));
    }
    reports.push_back(domination_report(false, 1.0, pairs, seed));
    reports.push_back(domination_report(true, 1.0, pairs, seed));
  }
  bool all_pass = true;
  for (const zcdp::VerificationReport& report : reports) {
    std::cout << zcdp::to_json(report) << '\n';
    for (const zcdp::Claim& claim : report.claims) {
      if (!claim.pass) {
        all_pass = false;
        std::cerr << "FAILED " << zcdp::mechanism_name(report.mechanism) << ' '
                  << mechanism_params_json(report.mechanism).dump() << ' '
                  << claim.name << ": expected " << format_shortest(claim.expected)
                  << ", observed " << format_shortest(claim.observed)
                  << ", tolerance " << format_shortest(claim.tolerance) << '\n';
      }
    }
  }
  return all_pass ? 0 : 1;
}

// --- figure ------------------------------------------------------------

int run_figure(double eps_min, double eps_max, int points, std::int64_t delta,
               int k, const std::string& csv_path, const std::string& svg_path) {
  zcdp::tools::FigureData data;
  try {
    data = zcdp::tools::figure_data(eps_min, eps_max, points, delta, k);
  } catch (const std::invalid_argument& err) {
    throw UsageError(err.what());
  }
  const std::string csv = zcdp::tools::figure_csv(data);
  if (csv_path.empty()) {
    std::cout << csv;
  } else {
    std::ofstream out(csv_path, std::ios::binary);
    if (!out || !(out << csv)) {
      std::cerr << "error: cannot write " << csv_path << '\n';
      return 1;
    }
  }
  if (!svg_path.empty()) {
    std::ofstream out(svg_path, std::ios::binary);
    if (!out || !(out << zcdp::tools::figure_svg(data))) {
      std::cerr << "error: cannot write " << svg_path << '\n';
      return 1;
    }
  }
  return 0;
}

// --- compose -----------------------------------------------------------

Mechanism parse_mechanism_line(const std::string& line) {
  std::istringstream stream(line);
  MechanismFlags flags;
  if (!(stream >> flags.name)) throw UsageError("empty mechanism line");
  std::string key;
  while (stream >> key) {
    std::string value;
    if (!(stream >> value)) throw UsageError("missing value after '" + key + "'");
    try {
      if (key == "--eps") {
        flags.eps = std::stod(value);
      } else if (key == "--eta") {
        flags.eta = std::stod(value);
      } else if (key == "--delta") {
        flags.delta = std::stoll(value);
      } else if (key == "--k") {
        flags.k = std::stoi(value);
      } else if (key == "--d") {
        flags.d = std::stoi(value);
      } else {
        throw UsageError("unknown flag '" + key + "' in '" + line + "'");
      }
    } catch (const std::invalid_argument&) {
      throw UsageError("bad value '" + value + "' for '" + key + "'");
    }
  }
  return build_mechanism(flags);
}

int run_compose(const std::string& path, bool as_json) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot read " << path << '\n';
    return 1;
  }
  std::vector<zcdp::BudgetEntry> entries;
  std::string line;
  while (std::getline(in, line)) {
    const auto begin = line.find_first_not_of(" \t\r");
    if (begin == std::string::npos || line[begin] == '#') continue;
    const auto end = line.find_last_not_of(" \t\r");
    const std::string trimmed = line.substr(begin, end - begin + 1);
    entries.push_back({trimmed, zcdp::zcdp_bound(parse_mechanism_line(trimmed))});
  }
  if (entries.empty()) throw UsageError("no mechanisms in " + path);
  const zcdp::BudgetLedger ledger = zcdp::compose(std::move(entries));
  if (as_json) {
    nlohmann::json doc;
    nlohmann::json list = nlohmann::json::array();
    for (const zcdp::BudgetEntry& entry : ledger.entries) {
      nlohmann::json item;
      item["label"] = entry.label;
      item["rho"] = entry.bound.rho;
      item["tight"] = entry.bound.tight;
      item["source"] = entry.bound.source;
      list.push_back(item);
    }
    doc["entries"] = list;
    doc["total"] = ledger.total;
    std::cout << doc.dump() << '\n';
  } else {
    for (const zcdp::BudgetEntry& entry : ledger.entries) {
      std::cout << format_sig12(entry.bound.rho) << "  " << entry.label << '\n';
    }
    std::cout << "total " << format_sig12(ledger.total) << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tight zCDP accounting for fundamental DP mechanisms"};
  app.require_subcommand(1);

  MechanismFlags bound_flags;
  bool bound_json = false;
  CLI::App* bound = app.add_subcommand("bound", "Print the zCDP constant");
  add_mechanism_options(bound, bound_flags);
  bound->add_flag("--json", bound_json, "emit JSON instead of text");

  MechanismFlags curve_flags;
  double alpha_min = 1.0 + 1e-6;
  double alpha_max = 100.0;
  int curve_points = 200;
  CLI::App* curve =
      app.add_subcommand("curve", "Emit the RDP curve as CSV on stdout");
  add_mechanism_options(curve, curve_flags);
  curve->add_option("--alpha-min", alpha_min, "smallest order (default 1+1e-6)");
  curve->add_option("--alpha-max", alpha_max, "largest order (default 100)");
  curve->add_option("--points", curve_points, "number of rows (default 200)")
      ->check(CLI::PositiveNumber);

  MechanismFlags verify_flags;
  bool verify_single = false;
  double verify_alpha_max = 1000.0;
  double verify_tol = 1e-9;
  std::uint64_t verify_seed = 1;
  int verify_pairs = 1000;
  CLI::App* verify = app.add_subcommand(
      "verify", "Certify the closed-form bounds; JSON report per line");
  verify->add_option("--mechanism", verify_flags.name,
                     "restrict to one mechanism family");
  verify->add_option("--eps", verify_flags.eps, "privacy budget");
  verify->add_option("--eta", verify_flags.eta, "range width (br)");
  verify->add_option("--delta", verify_flags.delta, "sensitivity (dlaplace)");
  verify->add_option("--k", verify_flags.k, "alphabet size (krr)");
  verify->add_option("--d", verify_flags.d, "dimension (rappor)");
  verify->add_option("--alpha-max", verify_alpha_max, "order search limit");
  verify->add_option("--tol", verify_tol, "sup refinement width");
  verify->add_option("--seed", verify_seed, "seed for randomized domination tests");
  verify->add_option("--pairs", verify_pairs, "random pairs per domination test")
      ->check(CLI::PositiveNumber);

  double fig_eps_min = 0.01, fig_eps_max = 10.0;
  int fig_points = 200;
  std::int64_t fig_delta = 2;
  int fig_k = 3;
  std::string fig_csv, fig_svg;
  CLI::App* figure = app.add_subcommand(
      "figure", "rho(eps) for all six families as CSV (and optional SVG)");
  figure->add_option("--eps-min", fig_eps_min, "left end of the eps grid (default 0.01)");
  figure->add_option("--eps-max", fig_eps_max, "right end of the eps grid (default 10)");
  figure->add_option("--points", fig_points, "grid size (default 200)");
  figure->add_option("--delta", fig_delta, "sensitivity of the dlaplace column (default 2)");
  figure->add_option("--k", fig_k, "alphabet size of the krr column (default 3)");
  figure->add_option("--csv", fig_csv, "CSV output path (stdout when omitted)");
  figure->add_option("--svg", fig_svg, "SVG output path (no SVG when omitted)");

  std::string compose_path;
  bool compose_json = false;
  CLI::App* compose = app.add_subcommand(
      "compose", "Sum the budget of mechanisms listed one per line in a file");
  compose->add_option("file", compose_path, "file of '<mechanism> <flags>' lines")
      ->required();
  compose->add_flag("--json", compose_json, "emit JSON instead of text");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& help) {
    return app.exit(help);
  } catch (const CLI::ParseError& err) {
    app.exit(err);
    return kExitUsage;
  }

  try {
    if (bound->parsed()) return run_bound(bound_flags, bound_json);
    if (curve->parsed()) return run_curve(curve_flags, alpha_min, alpha_max, curve_points);
    if (verify->parsed()) {
      verify_single = !verify_flags.name.empty();
      return run_verify(verify_single ? std::optional(verify_flags) : std::nullopt,
                        verify_alpha_max, verify_tol, verify_seed, verify_pairs);
    }
    if (figure->parsed()) {
      return run_figure(fig_eps_min, fig_eps_max, fig_points, fig_delta, fig_k,
                        fig_csv, fig_svg);
    }
    if (compose->parsed()) return run_compose(compose_path, compose_json);
  } catch (const UsageError& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << '\n';
    return 1;
  }
  return kExitUsage;
}
