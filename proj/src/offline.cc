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

#include "bicrit/offline.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <string>

#include "bicrit/errors.h"

namespace bicrit {
namespace {

// value(∅) = 0 without spending a query.
double query(SetOracle& oracle, ArmSet s) {
  return s.empty() ? 0.0 : oracle.value(s);
}

// Scans arms in tie-break order; a later arm replaces the incumbent only on a
// strictly larger score.
template <typename Score>
std::optional<Arm> argmax_arm(int n, TieBreak tie, Score&& score) {
  std::optional<Arm> best;
  double best_score = -std::numeric_limits<double>::infinity();
  for (int k = 0; k < n; ++k) {
    const Arm x = tie == TieBreak::kLowestIndex ? k : n - 1 - k;
    const std::optional<double> s = score(x);
    if (!s) continue;
    if (!best || *s > best_score) {
      best = x;
      best_score = *s;
    }
  }
  return best;
}

int integral_inverse(double omega) {
  const double inv = 1.0 / omega;
  const double k = std::round(inv);
  if (k < 1.0 || std::abs(inv - k) > 1e-9 * k) return 0;
  return static_cast<int>(k);
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace

std::string_view to_string(Problem p) {
  switch (p) {
    case Problem::kSC:
      return "SC";
    case Problem::kSCSC:
      return "SCSC";
    case Problem::kFSM:
      return "FSM";
  }
  return "unknown";
}

std::optional<Problem> parse_problem(std::string_view text) {
  for (auto p : {Problem::kSC, Problem::kSCSC, Problem::kFSM}) {
    if (text == to_string(p)) return p;
  }
  return std::nullopt;
}

std::string_view to_string(Sense s) {
  return s == Sense::kMaximize ? "max" : "min";
}

void OfflineSpec::validate(int n) const {
  if (!std::isfinite(kappa) || !std::isfinite(omega)) {
    throw InstanceError("offline: kappa and omega must be finite");
  }
  switch (problem) {
    case Problem::kSC:
      if (!(omega > 0.0 && omega < kappa)) {
        throw InstanceError("offline.omega: SC requires 0 < omega < kappa");
      }
      break;
    case Problem::kSCSC:
      if (!(kappa > 0.0)) {
        throw InstanceError("offline.kappa: SCSC requires kappa > 0");
      }
      if (omega != 0.0 && !(omega > 0.0 && omega < kappa)) {
        throw InstanceError("offline.omega: SCSC requires 0 < omega < kappa");
      }
      break;
    case Problem::kFSM: {
      if (!(omega > 0.0 && omega <= 1.0) || integral_inverse(omega) == 0) {
        throw InstanceError(
            "offline.omega: FSM requires 0 < omega <= 1 with 1/omega a "
            "positive integer");
      }
      if (kappa < 1.0 || kappa != std::floor(kappa)) {
        throw InstanceError("offline.kappa: FSM requires a positive integer");
      }
      if (!fairness) {
        throw InstanceError("offline.fairness: required for FSM");
      }
      const Fairness& fair = *fairness;
      if (static_cast<int>(fair.group_of.size()) != n) {
        throw InstanceError("offline.fairness.groups: expected " +
                            std::to_string(n) + " entries");
      }
      if (fair.lower.size() != fair.upper.size() || fair.lower.empty()) {
        throw InstanceError(
            "offline.fairness: lower and upper must have one entry per group");
      }
      for (std::size_t x = 0; x < fair.group_of.size(); ++x) {
        if (fair.group_of[x] < 0 || fair.group_of[x] >= fair.groups()) {
          throw InstanceError("offline.fairness.groups[" + std::to_string(x) +
                              "]: group index out of range");
        }
      }
      long long lower_sum = 0;
      for (int c = 0; c < fair.groups(); ++c) {
        if (fair.lower[c] < 0 || fair.lower[c] > fair.upper[c]) {
          throw InstanceError("offline.fairness: need 0 <= l <= u for group " +
                              std::to_string(c));
        }
        lower_sum += fair.lower[c];
      }
      if (lower_sum > kappa) {
        throw InstanceError("offline.fairness.lower: sum exceeds kappa");
      }
      break;
    }
  }
}

FairnessMatroid::FairnessMatroid(std::vector<int> group_of, int groups,
                                 int rank_bound, std::vector<int> lower_scaled,
                                 std::vector<int> upper_scaled)
    : group_of_(std::move(group_of)),
      groups_(groups),
      rank_bound_(rank_bound),
      lower_(std::move(lower_scaled)),
      upper_(std::move(upper_scaled)) {
  if (static_cast<int>(lower_.size()) != groups_ ||
      static_cast<int>(upper_.size()) != groups_) {
    throw InstanceError("fairness matroid: bound vectors must have one entry "
                        "per group");
  }
  for (int g : group_of_) {
    if (g < 0 || g >= groups_) {
      throw InstanceError("fairness matroid: group index out of range");
    }
  }
}

FairnessMatroid FairnessMatroid::relaxed(const OfflineSpec& spec, int n) {
  spec.validate(n);
  const int k = integral_inverse(spec.omega);
  const Fairness& fair = *spec.fairness;
  std::vector<int> lo, up;
  for (int c = 0; c < fair.groups(); ++c) {
    lo.push_back(fair.lower[c] * k);
    up.push_back(fair.upper[c] * k);
  }
  return FairnessMatroid(fair.group_of, fair.groups(),
                         static_cast<int>(spec.kappa) * k, std::move(lo),
                         std::move(up));
}

FairnessMatroid FairnessMatroid::strict(const OfflineSpec& spec, int n) {
  spec.validate(n);
  const Fairness& fair = *spec.fairness;
  return FairnessMatroid(fair.group_of, fair.groups(),
                         static_cast<int>(spec.kappa), fair.lower, fair.upper);
}

bool FairnessMatroid::contains(ArmSet s) const {
  if ((static_cast<std::uint64_t>(s.mask()) >> n()) != 0) {
    throw std::out_of_range("set 0x" + s.to_hex() + " outside the ground set");
  }
  std::vector<int> count(groups_, 0);
  for (Arm x : s.arms()) ++count[group_of_[x]];
  long long total = 0;
  for (int c = 0; c < groups_; ++c) {
    if (count[c] > upper_[c]) return false;
    total += std::max(count[c], lower_[c]);
  }
  return total <= rank_bound_;
}

GreedyRun mintss_run(const SetFunction& cost, SetOracle& g_hat, double kappa,
                     double omega, TieBreak tie) {
  if (cost.kind() != SetFunctionKind::kModular || cost.capped()) {
    throw ContractError("mintss_run: cost must be an uncapped modular function");
  }
  const int n = cost.n();
  const auto costs = cost.costs();
  const double target = kappa - omega;
  GreedyRun run{ArmSet(), {ArmSet()}};
  if (target <= 0.0) return run;

  const double top = g_hat.value(ArmSet::full(n));
  if (top < target) {
    throw InfeasibleError("MINTSS infeasible: g(full set) = " + fmt(top) +
                          " < kappa - omega = " + fmt(target) + " (gap " +
                          fmt(target - top) + ")");
  }
  ArmSet s;
  double g_s = 0.0;
  while (g_s < target) {
    const auto pick = argmax_arm(n, tie, [&](Arm x) -> std::optional<double> {
      if (s.contains(x)) return std::nullopt;
      return (std::min(query(g_hat, s.with(x)), kappa) - g_s) / costs[x];
    });
    // S = Ω satisfies the loop guard, so a candidate always exists here.
    s = s.with(*pick);
    g_s = query(g_hat, s);
    run.chain.push_back(s);
  }
  run.selected = s;
  return run;
}

GreedyRun scsc_greedy_run(const SetFunction& cost, SetOracle& g_hat,
                          double kappa, TieBreak tie) {
  const int n = cost.n();
  GreedyRun run{ArmSet(), {ArmSet()}};
  if (kappa <= 0.0) return run;

  std::vector<double> singleton(n);
  for (Arm x = 0; x < n; ++x) {
    singleton[x] = cost.singleton(x);
    if (!(singleton[x] > 0.0)) {
      throw ContractError("scsc_greedy_run: singleton cost of arm " +
                          std::to_string(x) + " is not positive");
    }
  }
  const double top = g_hat.value(ArmSet::full(n));
  if (top < kappa) {
    throw InfeasibleError("SCSC greedy infeasible: g(full set) = " + fmt(top) +
                          " < kappa = " + fmt(kappa) + " (gap " +
                          fmt(kappa - top) + ")");
  }
  ArmSet s;
  double g_s = 0.0;
  while (g_s < kappa) {
    const double base = std::min(g_s, kappa);
    const auto pick = argmax_arm(n, tie, [&](Arm x) -> std::optional<double> {
      if (s.contains(x)) return std::nullopt;
      return (std::min(query(g_hat, s.with(x)), kappa) - base) / singleton[x];
    });
    s = s.with(*pick);
    g_s = query(g_hat, s);
    run.chain.push_back(s);
  }
  run.selected = s;
  return run;
}

GreedyRun greedy_fairness_bi_run(SetOracle& f_hat, const FairnessMatroid& m,
                                 TieBreak tie) {
  const int n = m.n();
  GreedyRun run{ArmSet(), {ArmSet()}};
  ArmSet s;
  double f_s = 0.0;
  while (true) {
    const auto pick = argmax_arm(n, tie, [&](Arm x) -> std::optional<double> {
      if (s.contains(x) || !m.contains(s.with(x))) return std::nullopt;
      return query(f_hat, s.with(x)) - f_s;
    });
    if (!pick) break;
    s = s.with(*pick);
    f_s = query(f_hat, s);
    run.chain.push_back(s);
  }
  run.selected = s;
  return run;
}

GreedyRun greedy_fairness_bi_run(SetOracle& f_hat, const OfflineSpec& spec,
                                 int n, TieBreak tie) {
  return greedy_fairness_bi_run(f_hat, FairnessMatroid::relaxed(spec, n), tie);
}

GreedyRun run_offline(const OfflineSpec& spec, const SetFunction& cost,
                      SetOracle& oracle, int n, TieBreak tie) {
  switch (spec.problem) {
    case Problem::kSC:
      return mintss_run(cost, oracle, spec.kappa, spec.omega, tie);
    case Problem::kSCSC:
      return scsc_greedy_run(cost, oracle, spec.kappa, tie);
    case Problem::kFSM:
      return greedy_fairness_bi_run(oracle, spec, n, tie);
  }
  throw ContractError("run_offline: unknown problem");
}

}  // namespace bicrit
