// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Ground truth for experiments: exhaustive optima, regret and cumulative
// constraint violation of a trace, reference bound curves, concentration
// estimates, power-law fits and lemma witnesses.

#ifndef BICRIT_EVAL_H_
#define BICRIT_EVAL_H_

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bicrit/arm_set.h"
#include "bicrit/certificate.h"
#include "bicrit/offline.h"
#include "bicrit/online.h"
#include "bicrit/oracle.h"
#include "bicrit/set_function.h"

namespace bicrit {

inline constexpr int kMaxBruteForceArms = 22;

enum class ConstraintDir { kAtMost, kAtLeast };

struct OptResult {
  ArmSet opt_set;
  double opt_objective = 0.0;
  std::uint64_t feasible_count = 0;
  Sense sense = Sense::kMaximize;
  std::uint64_t instance_id = 0;
};

// Enumerates all 2^n subsets in mask order and keeps the best feasible one
// under `sense`; ties go to the lowest mask. Feasible means g(A) <= kappa
// (kAtMost) or g(A) >= kappa (kAtLeast).
// Throws CapabilityError for n > 22 and InfeasibleError if nothing is
// feasible.
OptResult brute_force_opt(const SetFunction& f, const SetFunction& g,
                          double kappa, Sense sense, ConstraintDir dir);

// Best member of `strict` (the unrelaxed fairness matroid) with exactly
// `cardinality` arms, maximizing f.
OptResult brute_force_opt(const SetFunction& f, const FairnessMatroid& strict,
                          int cardinality);

struct RegretReport {
  double regret_f = 0.0;
  double ccv_g = 0.0;
  double regret_explore = 0.0;
  double regret_exploit = 0.0;
  double ccv_explore = 0.0;
  double ccv_exploit = 0.0;
  double alpha = 0.0;
  double beta = 0.0;
  double kappa = 0.0;
  Sense sense = Sense::kMaximize;
};

// Regret and CCV of the sampled trace values:
//   max: regret = α·T·f(OPT) − Σ f_t,   ccv = Σ g_t − β·T·κ
//   min: regret = Σ f_t − α·T·f(OPT),   ccv = β·T·κ − Σ g_t
// No clamping. Each total is the sum of its explore and exploit parts.
// Throws ContractError if trace and optimum come from different instances
// or the optimum's sense differs from the certificate's.
RegretReport regret_ccv(const RunTrace& trace, const OptResult& opt,
                        const ResilienceCert& cert, double kappa);

// C · δ^(2/3) · h · N^(1/3) · T^(2/3) · (ln T)^(1/3). The constant C is a
// reference choice (default 3), not a proven constant.
double theoretical_bound(const ResilienceCert& cert, double h,
                         std::uint64_t horizon, double c = 3.0);

// Fraction of `trials` independent repetitions in which every query's
// m-sample f-mean and g-mean land strictly within confidence_radius(h, T, m)
// of the true means. Trials run on parallel workers, each on its own stream
// derived from (seed, trial index).
double clean_event_rate(const StochasticEnv& env,
                        std::span<const ArmSet> queries, std::uint64_t m,
                        std::uint64_t horizon, std::uint64_t trials,
                        std::uint64_t seed, unsigned workers = 0);

struct ScalingFit {
  double slope = 0.0;
  std::size_t used_points = 0;
  std::vector<std::string> warnings;
};

// Least-squares slope of ln(y) against ln(T). Non-positive y are dropped with
// a warning; throws std::domain_error if fewer than 4 points survive.
ScalingFit scaling_exponent(
    std::span<const std::pair<double, double>> points);

// Some x ∉ S with
//   (min(g(S ∪ {x}), κ) − min(g(S), κ)) / c_x >= (κ − min(g(S), κ)) / opt_cost.
// Throws InvariantViolation if none exists.
Arm density_bound_witness(const SetFunction& g, const SetFunction& cost,
                          ArmSet s, double kappa, double opt_cost);

// ln(a − b) >= ln(a) − 2b/a. Throws std::domain_error unless a > 0, b >= 0 and
// b/a <= 0.79.
bool log_gap_check(double a, double b);

}  // namespace bicrit

#endif  // BICRIT_EVAL_H_
