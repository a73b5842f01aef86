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

#include <array>
#include <cmath>
#include <stdexcept>

#include <doctest.h>

#include "reference_oracles.hpp"

using namespace zcdp;
using zcdp::testing::TestRng;

TEST_CASE("sinhc at and near zero") {
  CHECK(sinhc(0.0) == 1.0);
  CHECK(sinhc(1e-9) >= 1.0);
  CHECK(sinhc(1e-9) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(std::isfinite(sinhc(1e-300)));
}

TEST_CASE("sinhc against the series reference") {
  CHECK(sinhc(1.0) ==
        doctest::Approx(static_cast<double>(testing::sinh_series(1.0L) / 1.0L))
            .epsilon(1e-15));
  CHECK(sinhc(1.0) == doctest::Approx(1.1752011936438014).epsilon(1e-15));
  for (double x : {1e-5, 1e-3, 0.5, 3.0, 17.0, 44.0}) {
    const double reference =
        static_cast<double>(testing::sinh_series(x) / static_cast<long double>(x));
    CHECK(sinhc(x) == doctest::Approx(reference).epsilon(1e-14));
  }
}

TEST_CASE("sinhc rejects negative arguments") {
  CHECK_THROWS_AS(sinhc(-1.0), std::domain_error);
  CHECK_THROWS_AS(sinhc(-1e-300), std::domain_error);
}

TEST_CASE("log_sinhc values") {
  CHECK(log_sinhc(0.0) == 0.0);
  CHECK(log_sinhc(2.0) == doctest::Approx(0.5952201920542228).epsilon(1e-14));
  const double reference =
      static_cast<double>(std::log(testing::sinh_series(2.0L) / 2.0L));
  CHECK(log_sinhc(2.0) == doctest::Approx(reference).epsilon(1e-14));
  CHECK_THROWS_AS(log_sinhc(-0.5), std::domain_error);
}

TEST_CASE("log_sinhc does not overflow where sinh does") {
  const double v = log_sinhc(800.0);
  CHECK(std::isfinite(v));
  CHECK(v == doctest::Approx(800.0 - std::log(1600.0)).epsilon(1e-14));
  CHECK(std::isfinite(log_sinhc(1e6)));
}

TEST_CASE("log_sum_exp basics") {
  const std::array<LogTerm, 1> one{{{0.0, 0.0}}};
  CHECK(log_sum_exp(one) == 0.0);
  const std::array<LogTerm, 2> dominant{{{0.0, 1000.0}, {0.0, 0.0}}};
  CHECK(log_sum_exp(dominant) == 1000.0);
  const std::array<LogTerm, 2> halves{{{std::log(0.5), 0.0}, {std::log(0.5), 0.0}}};
  CHECK(log_sum_exp(halves) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK_THROWS_AS(log_sum_exp(std::span<const LogTerm>{}), std::domain_error);
  CHECK_THROWS_AS(log_sum_exp(std::span<const double>{}), std::domain_error);
}

TEST_CASE("log_sum_exp ignores -inf entries") {
  const double inf = std::numeric_limits<double>::infinity();
  const std::array<double, 3> terms{-inf, 0.0, -inf};
  CHECK(log_sum_exp(std::span<const double>(terms)) == 0.0);
}

TEST_CASE("sinhc is monotone and at least 1") {
  TestRng rng(20260801);
  for (int i = 0; i < 400; ++i) {
    double x = rng.uniform(0.0, 50.0);
    double y = rng.uniform(0.0, 50.0);
    if (x > y) std::swap(x, y);
    CHECK(sinhc(x) <= sinhc(y) * (1 + 1e-15));
    CHECK(sinhc(x) >= 1.0);
  }
}

TEST_CASE("log_sinhc is convex") {
  TestRng rng(20260802);
  for (int i = 0; i < 400; ++i) {
    const double x = rng.uniform(0.0, 50.0);
    const double y = rng.uniform(0.0, 50.0);
    const double t = rng.uniform();
    const double lhs = log_sinhc(t * x + (1 - t) * y);
    const double rhs = t * log_sinhc(x) + (1 - t) * log_sinhc(y);
    CHECK(lhs <= rhs + 1e-12);
  }
}

TEST_CASE("log_sinhc is superadditive") {
  TestRng rng(20260803);
  for (int i = 0; i < 400; ++i) {
    const double x = rng.uniform(0.0, 40.0);
    const double y = rng.uniform(0.0, 40.0);
    CHECK(log_sinhc(x + y) >= log_sinhc(x) + log_sinhc(y) - 1e-12);
  }
}

TEST_CASE("log_expm1 and log1p_exp") {
  CHECK(log_expm1(1.0) == doctest::Approx(std::log(std::expm1(1.0))).epsilon(1e-15));
  CHECK(log_expm1(800.0) == doctest::Approx(800.0).epsilon(1e-15));
  CHECK(log_expm1(1e-9) == doctest::Approx(std::log(1e-9) + 0.5e-9).epsilon(1e-9));
  CHECK_THROWS_AS(log_expm1(0.0), std::domain_error);
  CHECK_THROWS_AS(log_expm1(-1.0), std::domain_error);
  CHECK(log1p_exp(0.0) == doctest::Approx(std::log(2.0)).epsilon(1e-15));
  CHECK(log1p_exp(1000.0) == 1000.0);
  CHECK(log1p_exp(-1000.0) == doctest::Approx(0.0).epsilon(1e-15));
}

TEST_CASE("expm1_minus_x matches the series") {
  for (double x : {1e-10, 1e-6, 1e-3, 0.2, 0.5, 2.0, -0.3}) {
    // independent reference: 80-bit direct evaluation
    const long double reference =
        std::expm1(static_cast<long double>(x)) - static_cast<long double>(x);
    CHECK(expm1_minus_x(x) ==
          doctest::Approx(static_cast<double>(reference)).epsilon(1e-13));
  }
  CHECK(expm1_minus_x(1e-10) > 0.0);
}
