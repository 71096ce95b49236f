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

#include "bicrit/online.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

#include "bicrit/errors.h"

namespace bicrit {
namespace {

// Thrown through the offline algorithm when the horizon runs out mid-query.
struct BudgetExhausted {};

class Explorer {
 public:
  Explorer(std::uint64_t horizon, std::uint64_t m, StochasticEnv& env,
           RunTrace& trace)
      : horizon_(horizon), m_(m), env_(env), trace_(trace) {
    f_block_.reserve(m);
    g_block_.reserve(m);
  }

  const QueryMeans& means(ArmSet a) {
    if (auto it = index_.find(a); it != index_.end()) {
      return trace_.queries[it->second];
    }
    const std::uint64_t left = horizon_ - trace_.rounds.size();
    const std::uint64_t block = std::min(left, m_);
    f_block_.clear();
    g_block_.clear();
    for (std::uint64_t k = 0; k < block; ++k) {
      const double f = env_.sample(a, Feedback::kReward);
      const double g = env_.sample(a, Feedback::kCost);
      trace_.rounds.push_back(
          {trace_.rounds.size() + 1, a, f, g, Phase::kExplore});
      f_block_.push_back(f);
      g_block_.push_back(g);
    }
    trace_.explore_rounds += block;
    if (block < m_) throw BudgetExhausted{};
    index_.emplace(a, trace_.queries.size());
    trace_.queries.push_back(
        {a, empirical_mean(f_block_), empirical_mean(g_block_)});
    return trace_.queries.back();
  }

 private:
  std::uint64_t horizon_;
  std::uint64_t m_;
  StochasticEnv& env_;
  RunTrace& trace_;
  std::unordered_map<ArmSet, std::size_t> index_;
  std::vector<double> f_block_;
  std::vector<double> g_block_;
};

class MeanView : public SetOracle {
 public:
  MeanView(Explorer& explorer, Feedback which)
      : explorer_(explorer), which_(which) {}
  double value(ArmSet a) override {
    const QueryMeans& q = explorer_.means(a);
    return which_ == Feedback::kReward ? q.f_bar : q.g_bar;
  }

 private:
  Explorer& explorer_;
  Feedback which_;
};

}  // namespace

std::uint64_t exploration_reps(double delta, std::uint64_t horizon,
                               std::uint64_t n_calls) {
  if (!(delta > 0.0) || !std::isfinite(delta)) {
    throw std::domain_error("exploration_reps: delta must be positive");
  }
  if (horizon < 2) throw std::domain_error("exploration_reps: T must be >= 2");
  if (n_calls < 1) throw std::domain_error("exploration_reps: N must be >= 1");
  const double t = static_cast<double>(horizon);
  const double value = std::cbrt(delta * delta) * std::cbrt(t * t) *
                       std::cbrt(std::log(t)) /
                       (2.0 * std::cbrt(static_cast<double>(n_calls) *
                                        static_cast<double>(n_calls)));
  const double m = std::ceil(value);
  return m < 1.0 ? 1 : static_cast<std::uint64_t>(m);
}

double confidence_radius(double h, std::uint64_t horizon, std::uint64_t m) {
  if (!(h > 0.0)) throw std::domain_error("confidence_radius: h must be > 0");
  if (horizon < 2) throw std::domain_error("confidence_radius: T must be >= 2");
  if (m < 1) throw std::domain_error("confidence_radius: m must be >= 1");
  return std::sqrt(h * h * std::log(static_cast<double>(horizon)) /
                   (2.0 * static_cast<double>(m)));
}

double pairwise_sum(std::span<const double> values) {
  if (values.size() <= 8) {
    double s = 0.0;
    for (double v : values) s += v;
    return s;
  }
  const std::size_t half = values.size() / 2;
  return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

double empirical_mean(std::span<const double> values) {
  if (values.empty()) throw std::domain_error("empirical_mean: no samples");
  if (std::all_of(values.begin(), values.end(),
                  [&](double v) { return v == values.front(); })) {
    return values.front();
  }
  return pairwise_sum(values) / static_cast<double>(values.size());
}

RunTrace explore_then_commit(std::uint64_t horizon, std::uint64_t m,
                             StochasticEnv& env,
                             const OfflineAlgorithm& offline) {
  if (m < 1) throw std::domain_error("explore_then_commit: m must be >= 1");
  RunTrace trace;
  trace.m = m;
  trace.rounds.reserve(horizon);
  Explorer explorer(horizon, m, env, trace);
  MeanView f_bar(explorer, Feedback::kReward);
  MeanView g_bar(explorer, Feedback::kCost);
  try {
    trace.committed = offline(f_bar, g_bar);
  } catch (const BudgetExhausted&) {
    trace.budget_exhausted = true;
    trace.committed_is_fallback = true;
    trace.committed = trace.queries.empty() ? ArmSet()
                                            : trace.queries.back().set;
    trace.warnings.push_back(
        "exploration exhausted the horizon before the offline algorithm "
        "returned; committed set is the last fully explored query");
  } catch (const InfeasibleError& e) {
    throw InfeasibleError(std::string("exploration phase: ") + e.what());
  }
  while (trace.rounds.size() < horizon) {
    const ArmSet s = trace.committed;
    const double f = env.sample(s, Feedback::kReward);
    const double g = env.sample(s, Feedback::kCost);
    trace.rounds.push_back({trace.rounds.size() + 1, s, f, g, Phase::kExploit});
  }
  return trace;
}

RunTrace run_bicriteria_cmab(RunConfig& cfg) {
  const ResilienceCert& cert = cfg.cert;
  const std::uint64_t m =
      cfg.m_override ? *cfg.m_override
                     : exploration_reps(cert.delta, cfg.horizon, cert.n_calls);
  const int n = cfg.env.f_mean().n();
  cfg.offline.validate(n);
  const OfflineSpec spec = cfg.offline;
  const SetFunction cost = cfg.env.f_mean();
  const TieBreak tie = cfg.tie;
  OfflineAlgorithm algo = [&](SetOracle& f_bar, SetOracle& g_bar) {
    SetOracle& stochastic = spec.problem == Problem::kFSM ? f_bar : g_bar;
    return run_offline(spec, cost, stochastic, n, tie).selected;
  };
  RunTrace trace = explore_then_commit(cfg.horizon, m, cfg.env, algo);
  trace.instance_id = cfg.instance_id;

  const double n_calls = static_cast<double>(cert.n_calls);
  const double min_horizon =
      std::max(n_calls, 2.0 * std::sqrt(2.0) * n_calls / cert.delta);
  if (static_cast<double>(cfg.horizon) < min_horizon) {
    trace.warnings.push_back("horizon T = " + std::to_string(cfg.horizon) +
                             " is below max{N, 2*sqrt(2)*N/delta}; the regret "
                             "bound does not apply");
  }
  if (n_calls * static_cast<double>(m) > static_cast<double>(cfg.horizon)) {
    trace.warnings.push_back("N*m exceeds T; exploration may be truncated");
  }
  return trace;
}

bool clean_event(const RunTrace& trace, const StochasticEnv& env, double rad) {
  for (const QueryMeans& q : trace.queries) {
    if (std::abs(q.f_bar - env.f_mean().eval(q.set)) > rad ||
        std::abs(q.g_bar - env.g_mean().eval(q.set)) > rad) {
      return false;
    }
  }
  return true;
}

}  // namespace bicrit
