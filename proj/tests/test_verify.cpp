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

#include "zcdp/verify.hpp"

#include <cmath>
#include <stdexcept>
#include <thread>
#include <vector>

#include <doctest.h>
#include <json.hpp>

#include "zcdp/zcdp_bounds.hpp"

using namespace zcdp;

TEST_CASE("sup search finds the limit value for the generic family") {
  const SupSearchResult r = sup_rdp_over_alpha(RdpCurve(GenericDp{1.0}), 1000, 1e-9);
  CHECK(r.sup_value == doctest::Approx(std::tanh(0.5)).epsilon(1e-12));
  CHECK(r.attained_at_limit);
  CHECK(r.sup_value >= RdpCurve(GenericDp{1.0}).kl());
  CHECK(r.grid_size >= 2000);
  CHECK(r.alpha_star >= 1.0);
}

TEST_CASE("sup search on the laplace family") {
  const SupSearchResult r = sup_rdp_over_alpha(RdpCurve(Laplace{2.0}), 1000, 1e-9);
  CHECK(r.sup_value == doctest::Approx(2.0 + std::exp(-2.0) - 1.0).epsilon(1e-12));
  CHECK(r.attained_at_limit);
}

TEST_CASE("sup search leaves the limit for large alphabets") {
  const RdpCurve curve(Krr{1.0, 20});
  const SupSearchResult r = sup_rdp_over_alpha(curve, 1000, 1e-9);
  CHECK_FALSE(r.attained_at_limit);
  CHECK(r.sup_value > curve.kl());
  CHECK(r.alpha_star > 1.0);
  // threshold says the limit stops being optimal at k*(1) ~ 8.76
  CHECK(krr_threshold(1.0) < 20.0);
  CHECK_THROWS_AS(sup_rdp_over_alpha(curve, 1.0, 1e-9), std::domain_error);
}

TEST_CASE("sup search extends past alpha_max when the cap requires it") {
  // maximizer near alpha ~ 550 per the vanishing-in-k regime
  const SupSearchResult r =
      sup_rdp_over_alpha(RdpCurve(Krr{0.05, 1000000}), 1000, 1e-9);
  CHECK(r.sup_value == doctest::Approx(4.532106e-5).epsilon(1e-6));
  CHECK(r.alpha_star > 500.0);
}

TEST_CASE("certification reports pass for tight mechanisms") {
  for (const Mechanism& m :
       {Mechanism{DiscreteLaplace{1.0, 3}}, Mechanism{Rappor{2.0, 6}},
        Mechanism{BoundedRange{1.0}}, Mechanism{Laplace{0.5}},
        Mechanism{GenericDp{5.0}}, Mechanism{Krr{1.0, 4}}}) {
    const VerificationReport report = certify_tightness(m, 1000, 1e-9);
    for (const Claim& claim : report.claims) {
      INFO(mechanism_name(m), " claim ", claim.name, " expected ", claim.expected,
           " observed ", claim.observed);
      CHECK(claim.pass);
    }
    CHECK(report.pass());
  }
}

TEST_CASE("certification flags the non-limit regime without failing") {
  const VerificationReport report = certify_tightness(Krr{1.0, 20}, 1000, 1e-9);
  CHECK(report.pass());
  bool saw_excess = false;
  for (const Claim& claim : report.claims) {
    if (claim.name == "sup_exceeds_kl") {
      saw_excess = true;
      CHECK(claim.pass);
    }
  }
  CHECK(saw_excess);
}

TEST_CASE("concavity scan") {
  CHECK(check_concavity_krr(1.0, 4, 120));
  CHECK(check_concavity_krr(1.0, 2, 120));
  // past the threshold the curvature flips somewhere; record, do not assert
  const bool large_k = check_concavity_krr(1.0, 50, 120);
  MESSAGE("concavity at k=50: ", large_k);
  CHECK_THROWS_AS(check_concavity_krr(1.0, 4, 2), std::domain_error);
}

TEST_CASE("derivative condition matches the threshold") {
  CHECK(check_derivative_condition_krr(1.0, 6));
  CHECK_FALSE(check_derivative_condition_krr(1.0, 9));
  CHECK(check_derivative_condition_krr(1e-4, 6));
  for (double eps : {0.1, 0.5, 1.0, 2.0, 5.0}) {
    const double threshold = krr_threshold(eps);
    for (int k : {2, 4, 6, 7, 9, 15, 40}) {
      CHECK(check_derivative_condition_krr(eps, k) == (k <= threshold));
    }
  }
}

TEST_CASE("non-optimality witnesses") {
  for (const auto& [eps, k] : std::initializer_list<std::pair<double, int>>{
           {1.0, 9}, {1.0, 20}, {2.0, 50}, {0.5, 8}}) {
    const double alpha0 = check_non_optimality_witness(eps, k);
    CHECK(alpha0 > 1.0);
    CHECK(alpha0 <= 2.0);
    const double f = rdp_krr(eps, k, RenyiOrder::of(alpha0)) / alpha0;
    CHECK(f > rdp_krr(eps, k, RenyiOrder::kl()) * (1 + 1e-9));
  }
  CHECK_THROWS_AS(check_non_optimality_witness(1.0, 4), std::domain_error);
}

TEST_CASE("asymptotic ratios") {
  CHECK(check_asymptotics(Laplace{1.0}, 2.0, 1e-3) ==
        doctest::Approx(1.0).epsilon(1e-3));
  CHECK(check_asymptotics(BoundedRange{1.0}, 8.0, 1e-3) ==
        doctest::Approx(1.0).epsilon(1e-3));
  CHECK(check_asymptotics(Krr{1.0, 6}, 6.0, 1e-3) ==
        doctest::Approx(1.0).epsilon(1e-3));
  CHECK_THROWS_AS(check_asymptotics(Laplace{1.0}, 2.0, 0.5), std::domain_error);
}

TEST_CASE("the generic constant dominates its own curve at every order") {
  for (double eps : {0.05, 0.5, 1.0, 2.0, 5.0, 10.0}) {
    const double rho = zcdp_generic(eps).rho;
    for (double alpha : {1.0 + 1e-8, 1.001, 1.5, 3.0, 20.0, 500.0}) {
      CHECK(rho - rdp_generic_dp(eps, RenyiOrder::of(alpha)) / alpha >= -1e-12);
    }
  }
}

TEST_CASE("concave curves with tame slope peak at the limit") {
  for (double eps : {0.05, 0.5, 1.0, 2.0, 5.0}) {
    for (int k = 2; k <= 6; ++k) {
      if (!check_derivative_condition_krr(eps, k)) continue;
      if (!check_concavity_krr(eps, k, 60)) continue;
      const SupSearchResult r = sup_rdp_over_alpha(RdpCurve(Krr{eps, k}), 1000, 1e-9);
      CHECK(r.attained_at_limit);
    }
  }
}

TEST_CASE("evaluation is pure: parallel callers see identical results") {
  const RdpCurve curve(DiscreteLaplace{1.0, 5});
  std::vector<double> serial;
  for (int i = 0; i < 64; ++i) {
    serial.push_back(curve(RenyiOrder::of(1.0 + 0.25 * (i + 1))));
  }
  std::vector<std::vector<double>> parallel(8);
  std::vector<std::thread> workers;
  workers.reserve(8);
  for (int w = 0; w < 8; ++w) {
    workers.emplace_back([&curve, &parallel, w] {
      for (int i = 0; i < 64; ++i) {
        parallel[w].push_back(curve(RenyiOrder::of(1.0 + 0.25 * (i + 1))));
      }
    });
  }
  for (std::thread& t : workers) t.join();
  for (const auto& run : parallel) {
    CHECK(run == serial);
  }
}

TEST_CASE("reports serialize to stable JSON") {
  const VerificationReport report = certify_tightness(DiscreteLaplace{1.0, 2}, 100, 1e-9);
  const std::string serialized = to_json(report);
  const nlohmann::json parsed = nlohmann::json::parse(serialized);
  CHECK(parsed.dump() == serialized);  // parse then reserialize is identity
  CHECK(parsed["mechanism"] == "dlaplace");
  CHECK(parsed["params"]["eps"] == 1.0);
  CHECK(parsed["params"]["delta"] == 2);
  CHECK(parsed["pass"].is_boolean());
  CHECK(parsed["claims"].is_array());
  CHECK(parsed["claims"].size() == report.claims.size());
}
