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

#ifndef ZCDP_MECHANISM_H_
#define ZCDP_MECHANISM_H_

#include <cstdint>
#include <string>
#include <variant>

namespace zcdp {

// Mechanism families covered by the accountant.  Parameters are the privacy
// budget (eps or eta) plus the family-specific shape parameters.

struct GenericDp {
  double eps;  // pure-DP budget, > 0
};

struct Laplace {
  double eps;  // pure-DP budget of the calibrated mechanism, > 0
};

struct DiscreteLaplace {
  double eps;           // pure-DP budget, > 0
  std::int64_t delta;   // integer sensitivity, >= 1
};

struct Krr {
  double eps;  // pure-DP budget, > 0
  int k;       // alphabet size, >= 2
};

struct Rappor {
  double eps;  // pure-DP budget, > 0
  int d = 2;   // one-hot dimension, >= 2; bounds do not depend on it
};

struct BoundedRange {
  double eta;  // range width, > 0
};

using Mechanism =
    std::variant<GenericDp, Laplace, DiscreteLaplace, Krr, Rappor, BoundedRange>;

// Throws std::domain_error when a parameter is out of range.
void validate(const Mechanism& mechanism);

// Short family tag: "generic", "laplace", "dlaplace", "krr", "rappor", "br".
std::string mechanism_name(const Mechanism& mechanism);

// Universal upper bound on the RDP curve: eps for DP families, eta for
// bounded-range.  Used to cut off sup searches over alpha.
double privacy_cap(const Mechanism& mechanism);

// A Renyi divergence order.  alpha == 1 is a distinguished tag selecting the
// exact KL limit of every curve, never a numerical approximation of it.
class RenyiOrder {
 public:
  static RenyiOrder kl() { return RenyiOrder(1.0); }
  static RenyiOrder of(double alpha);

  double alpha() const { return alpha_; }
  bool is_kl() const { return alpha_ == 1.0; }

 private:
  explicit RenyiOrder(double alpha) : alpha_(alpha) {}
  double alpha_;
};

// A zCDP constant for a mechanism, with its provenance and whether the value
// is known to be unimprovable.
struct ZcdpBound {
  double rho = 0.0;
  bool tight = false;
  std::string source;    // identifier of the result the value comes from
  Mechanism mechanism;
};

}  // namespace zcdp

#endif  // ZCDP_MECHANISM_H_
