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

#include "zcdp/mechanism.hpp"

#include <cmath>
#include <stdexcept>

namespace zcdp {

namespace {

void require_positive(double value, const char* what) {
  if (!(value > 0) || !std::isfinite(value)) {
    throw std::domain_error(std::string(what) + " must be positive and finite");
  }
}

}  // namespace

void validate(const Mechanism& mechanism) {
  std::visit(
      [](const auto& m) {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, GenericDp> || std::is_same_v<T, Laplace>) {
          require_positive(m.eps, "eps");
        } else if constexpr (std::is_same_v<T, DiscreteLaplace>) {
          require_positive(m.eps, "eps");
          if (m.delta < 1) throw std::domain_error("delta must be >= 1");
        } else if constexpr (std::is_same_v<T, Krr>) {
          require_positive(m.eps, "eps");
          if (m.k < 2) throw std::domain_error("k must be >= 2");
        } else if constexpr (std::is_same_v<T, Rappor>) {
          require_positive(m.eps, "eps");
          if (m.d < 2) throw std::domain_error("d must be >= 2");
        } else {
          static_assert(std::is_same_v<T, BoundedRange>);
          require_positive(m.eta, "eta");
        }
      },
      mechanism);
}

std::string mechanism_name(const Mechanism& mechanism) {
  return std::visit(
      [](const auto& m) -> std::string {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, GenericDp>) return "generic";
        if constexpr (std::is_same_v<T, Laplace>) return "laplace";
        if constexpr (std::is_same_v<T, DiscreteLaplace>) return "dlaplace";
        if constexpr (std::is_same_v<T, Krr>) return "krr";
        if constexpr (std::is_same_v<T, Rappor>) return "rappor";
        if constexpr (std::is_same_v<T, BoundedRange>) return "br";
      },
      mechanism);
}

double privacy_cap(const Mechanism& mechanism) {
  return std::visit(
      [](const auto& m) -> double {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, BoundedRange>) {
          return m.eta;
        } else {
          return m.eps;
        }
      },
      mechanism);
}

RenyiOrder RenyiOrder::of(double alpha) {
  if (!(alpha >= 1) || !std::isfinite(alpha)) {
    throw std::domain_error("RenyiOrder: alpha must be finite and >= 1");
  }
  return RenyiOrder(alpha);
}

}  // namespace zcdp
