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

// Resilient offline bi-criteria algorithms:
//
//   SC    minimize a modular cost subject to g(S) >= kappa   (MINTSS)
//   SCSC  minimize a submodular cost subject to g(S) >= kappa (cost-ratio
//         greedy)
//   FSM   maximize f subject to group fairness and |S| <= kappa
//         (greedy-fairness-bi over the relaxed fairness matroid)
//
// Each algorithm reads the stochastic function only through a SetOracle, so
// the same code runs on exact values, ε-perturbed values or empirical means.
// The empty set is never queried: its value is 0 by normalization.

#ifndef BICRIT_OFFLINE_H_
#define BICRIT_OFFLINE_H_

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "bicrit/arm_set.h"
#include "bicrit/oracle.h"
#include "bicrit/set_function.h"

namespace bicrit {

enum class Problem { kSC, kSCSC, kFSM };
enum class Sense { kMaximize, kMinimize };
enum class TieBreak { kLowestIndex, kHighestIndex };

std::string_view to_string(Problem p);
std::optional<Problem> parse_problem(std::string_view text);
std::string_view to_string(Sense s);

inline Sense sense_of(Problem p) {
  return p == Problem::kFSM ? Sense::kMaximize : Sense::kMinimize;
}

struct Fairness {
  std::vector<int> group_of;  // group index per arm, in [0, C)
  std::vector<int> lower;     // l_c
  std::vector<int> upper;     // u_c
  int groups() const { return static_cast<int>(lower.size()); }
};

struct OfflineSpec {
  Problem problem = Problem::kSC;
  double kappa = 0.0;
  double omega = 0.0;
  std::optional<Fairness> fairness;  // FSM only

  Sense sense() const { return sense_of(problem); }
  // Throws InstanceError on violated invariants. n is the ground-set size.
  void validate(int n) const;
};

// M_k(P, kappa·k, l·k, u·k) with k = 1/omega a positive integer: sets whose
// group counts stay under u_c·k and whose sum over groups of
// max(|S ∩ Ω_c|, l_c·k) stays under kappa·k.
class FairnessMatroid {
 public:
  FairnessMatroid(std::vector<int> group_of, int groups, int rank_bound,
                  std::vector<int> lower_scaled,
                  std::vector<int> upper_scaled);
  // Scaled by 1/omega; requires the spec to be a valid FSM spec.
  static FairnessMatroid relaxed(const OfflineSpec& spec, int n);
  // Unscaled (omega = 1) version of the same constraints.
  static FairnessMatroid strict(const OfflineSpec& spec, int n);

  int n() const { return static_cast<int>(group_of_.size()); }
  int groups() const { return groups_; }
  int rank_bound() const { return rank_bound_; }  // kappa/omega
  const std::vector<int>& group_of() const { return group_of_; }
  const std::vector<int>& lower() const { return lower_; }
  const std::vector<int>& upper() const { return upper_; }

  bool contains(ArmSet s) const;

 private:
  std::vector<int> group_of_;
  int groups_;
  int rank_bound_;
  std::vector<int> lower_;
  std::vector<int> upper_;
};

inline bool fairness_matroid_member(const FairnessMatroid& m, ArmSet s) {
  return m.contains(s);
}

// Output set plus the prefix chain ∅ = A_0 ⊂ A_1 ⊂ ... ⊂ A_k = selected.
struct GreedyRun {
  ArmSet selected;
  std::vector<ArmSet> chain;
};

// Greedy-MINTSS. While ĝ(S) < kappa − omega, adds the arm maximizing
// (min(ĝ(S ∪ {x}), kappa) − ĝ(S)) / c_x.
//
// Throws ContractError unless `cost` is an uncapped modular function and
// InfeasibleError if ĝ(Ω) < kappa − omega.
GreedyRun mintss_run(const SetFunction& cost, SetOracle& g_hat, double kappa,
                     double omega, TieBreak tie = TieBreak::kLowestIndex);

// Greedy for submodular-cost submodular-cover. While ĝ(S) < kappa, adds the
// arm maximizing (min(ĝ(S ∪ {i}), kappa) − min(ĝ(S), kappa)) / f({i}).
// Throws InfeasibleError if ĝ(Ω) < kappa.
GreedyRun scsc_greedy_run(const SetFunction& cost, SetOracle& g_hat,
                          double kappa, TieBreak tie = TieBreak::kLowestIndex);

// greedy-fairness-bi: while some arm can join S inside the relaxed matroid,
// adds the feasible arm with the largest noisy gain f̂(S ∪ {i}) − f̂(S).
GreedyRun greedy_fairness_bi_run(SetOracle& f_hat, const FairnessMatroid& m,
                                 TieBreak tie = TieBreak::kLowestIndex);
GreedyRun greedy_fairness_bi_run(SetOracle& f_hat, const OfflineSpec& spec,
                                 int n, TieBreak tie = TieBreak::kLowestIndex);

// Runs the algorithm for spec.problem. For SC and SCSC the oracle answers for
// the constraint g and `cost` is the known objective; for FSM the oracle
// answers for the objective f and `cost` is unused.
GreedyRun run_offline(const OfflineSpec& spec, const SetFunction& cost,
                      SetOracle& oracle, int n,
                      TieBreak tie = TieBreak::kLowestIndex);

}  // namespace bicrit

#endif  // BICRIT_OFFLINE_H_
