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

#include "bicrit/eval.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

#include "bicrit/errors.h"

namespace bicrit {
namespace {

void check_brute_force_size(int n) {
  if (n > kMaxBruteForceArms) {
    throw CapabilityError("brute force limited to n <= 22, got n = " +
                          std::to_string(n));
  }
}

bool better(double candidate, double incumbent, Sense sense) {
  return sense == Sense::kMaximize ? candidate > incumbent
                                   : candidate < incumbent;
}

}  // namespace

OptResult brute_force_opt(const SetFunction& f, const SetFunction& g,
                          double kappa, Sense sense, ConstraintDir dir) {
  const int n = f.n();
  check_brute_force_size(n);
  if (g.n() != n) throw ContractError("brute_force_opt: f and g differ in n");
  OptResult best;
  best.sense = sense;
  bool found = false;
  const std::uint32_t count = 1u << n;
  for (std::uint32_t m = 0; m < count; ++m) {
    const ArmSet a = ArmSet::from_mask(m);
    const double gv = g.eval(a);
    const bool feasible =
        dir == ConstraintDir::kAtMost ? gv <= kappa : gv >= kappa;
    if (!feasible) continue;
    ++best.feasible_count;
    const double fv = f.eval(a);
    if (!found || better(fv, best.opt_objective, sense)) {
      best.opt_set = a;
      best.opt_objective = fv;
      found = true;
    }
  }
  if (!found) {
    throw InfeasibleError("brute_force_opt: no feasible set");
  }
  return best;
}

OptResult brute_force_opt(const SetFunction& f, const FairnessMatroid& strict,
                          int cardinality) {
  const int n = f.n();
  check_brute_force_size(n);
  if (strict.n() != n) {
    throw ContractError("brute_force_opt: matroid and f differ in n");
  }
  OptResult best;
  best.sense = Sense::kMaximize;
  bool found = false;
  const std::uint32_t count = 1u << n;
  for (std::uint32_t m = 0; m < count; ++m) {
    const ArmSet a = ArmSet::from_mask(m);
    if (a.size() != cardinality || !strict.contains(a)) continue;
    ++best.feasible_count;
    const double fv = f.eval(a);
    if (!found || fv > best.opt_objective) {
      best.opt_set = a;
      best.opt_objective = fv;
      found = true;
    }
  }
  if (!found) {
    throw InfeasibleError("brute_force_opt: no fairness-matroid member of "
                          "size " + std::to_string(cardinality));
  }
  return best;
}

RegretReport regret_ccv(const RunTrace& trace, const OptResult& opt,
                        const ResilienceCert& cert, double kappa) {
  if (trace.instance_id != opt.instance_id) {
    throw ContractError("regret_ccv: trace and optimum come from different "
                        "instances");
  }
  if (opt.sense != cert.sense) {
    throw ContractError("regret_ccv: optimum and certificate disagree on "
                        "sense");
  }
  RegretReport r;
  r.alpha = cert.alpha;
  r.beta = cert.beta;
  r.kappa = kappa;
  r.sense = cert.sense;

  double f_sum[2] = {0.0, 0.0};
  double g_sum[2] = {0.0, 0.0};
  std::uint64_t rounds[2] = {0, 0};
  for (const Round& round : trace.rounds) {
    const int k = round.phase == Phase::kExplore ? 0 : 1;
    f_sum[k] += round.sampled_f;
    g_sum[k] += round.sampled_g;
    ++rounds[k];
  }
  const double target_f = cert.alpha * opt.opt_objective;
  const double target_g = cert.beta * kappa;
  double regret[2], ccv[2];
  for (int k = 0; k < 2; ++k) {
    const double len = static_cast<double>(rounds[k]);
    if (cert.sense == Sense::kMaximize) {
      regret[k] = target_f * len - f_sum[k];
      ccv[k] = g_sum[k] - target_g * len;
    } else {
      regret[k] = f_sum[k] - target_f * len;
      ccv[k] = target_g * len - g_sum[k];
    }
  }
  r.regret_explore = regret[0];
  r.regret_exploit = regret[1];
  r.ccv_explore = ccv[0];
  r.ccv_exploit = ccv[1];
  r.regret_f = regret[0] + regret[1];
  r.ccv_g = ccv[0] + ccv[1];
  return r;
}

double theoretical_bound(const ResilienceCert& cert, double h,
                         std::uint64_t horizon, double c) {
  if (horizon < 2) throw std::domain_error("theoretical_bound: T must be >= 2");
  if (!(c > 0.0)) throw std::domain_error("theoretical_bound: C must be > 0");
  if (!(h > 0.0)) throw std::domain_error("theoretical_bound: h must be > 0");
  if (!(cert.delta > 0.0) || cert.n_calls < 1) {
    throw std::domain_error("theoretical_bound: need delta > 0 and N >= 1");
  }
  const double t = static_cast<double>(horizon);
  return c * std::cbrt(cert.delta * cert.delta) * h *
         std::cbrt(static_cast<double>(cert.n_calls)) * std::cbrt(t * t) *
         std::cbrt(std::log(t));
}

double clean_event_rate(const StochasticEnv& env,
                        std::span<const ArmSet> queries, std::uint64_t m,
                        std::uint64_t horizon, std::uint64_t trials,
                        std::uint64_t seed, unsigned workers) {
  if (trials < 100) {
    throw std::domain_error("clean_event_rate: need at least 100 trials");
  }
  const double rad = confidence_radius(env.h(), horizon, m);
  std::vector<double> f_true, g_true;
  for (ArmSet a : queries) {
    f_true.push_back(env.f_mean().eval(a));
    g_true.push_back(env.g_mean().eval(a));
  }
  std::vector<unsigned char> clean(trials, 0);
  auto run_trial = [&](std::uint64_t trial) {
    StochasticEnv local = env.reseeded(seed, trial);
    std::vector<double> fs(m), gs(m);
    for (std::size_t q = 0; q < queries.size(); ++q) {
      for (std::uint64_t k = 0; k < m; ++k) {
        fs[k] = local.sample(queries[q], Feedback::kReward);
        gs[k] = local.sample(queries[q], Feedback::kCost);
      }
      if (!(std::abs(empirical_mean(fs) - f_true[q]) < rad) ||
          !(std::abs(empirical_mean(gs) - g_true[q]) < rad)) {
        return;
      }
    }
    clean[trial] = 1;
  };
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(
      std::min<std::uint64_t>(workers, trials));
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::uint64_t t = w; t < trials; t += workers) run_trial(t);
      });
    }
  }
  std::uint64_t count = 0;
  for (unsigned char c : clean) count += c;
  return static_cast<double>(count) / static_cast<double>(trials);
}

ScalingFit scaling_exponent(
    std::span<const std::pair<double, double>> points) {
  ScalingFit fit;
  std::vector<double> xs, ys;
  for (const auto& [t, y] : points) {
    if (!(y > 0.0) || !(t > 0.0)) {
      fit.warnings.push_back("dropped non-positive point at T = " +
                             std::to_string(t));
      continue;
    }
    xs.push_back(std::log(t));
    ys.push_back(std::log(y));
  }
  if (xs.size() < 4) {
    throw std::domain_error("scaling_exponent: fewer than 4 positive points (" +
                            std::to_string(xs.size()) + ")");
  }
  const double k = static_cast<double>(xs.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= k;
  my /= k;
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  if (sxx == 0.0) {
    throw std::domain_error("scaling_exponent: all T values coincide");
  }
  fit.slope = sxy / sxx;
  fit.used_points = xs.size();
  return fit;
}

Arm density_bound_witness(const SetFunction& g, const SetFunction& cost,
                          ArmSet s, double kappa, double opt_cost) {
  if (cost.kind() != SetFunctionKind::kModular) {
    throw ContractError("density_bound_witness: cost must be modular");
  }
  if (!(opt_cost > 0.0)) {
    throw std::domain_error("density_bound_witness: opt_cost must be > 0");
  }
  const auto costs = cost.costs();
  const double g_s = std::min(g.eval(s), kappa);
  const double rhs = (kappa - g_s) / opt_cost;
  const double slack = 1e-12 * std::max(1.0, std::abs(rhs));
  for (Arm x = 0; x < g.n(); ++x) {
    if (s.contains(x)) continue;
    const double lhs = (std::min(g.eval(s.with(x)), kappa) - g_s) / costs[x];
    if (lhs >= rhs - slack) return x;
  }
  throw InvariantViolation("density_bound_witness: no arm meets the density "
                           "bound for S = 0x" + s.to_hex());
}

bool log_gap_check(double a, double b) {
  if (!(a > 0.0) || !(b >= 0.0) || b / a > 0.79) {
    throw std::domain_error("log_gap_check: need a > 0, b >= 0, b/a <= 0.79");
  }
  return std::log(a - b) >= std::log(a) - 2.0 * b / a;
}

}  // namespace bicrit
