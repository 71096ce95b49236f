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

// Explore-then-exploit conversion of a resilient offline algorithm into a
// bandit agent. Every set the offline algorithm asks about is played m times
// in a row; the algorithm receives the empirical means of those m rounds and
// nothing else. Its output is then played for the rest of the horizon.

#ifndef BICRIT_ONLINE_H_
#define BICRIT_ONLINE_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bicrit/arm_set.h"
#include "bicrit/certificate.h"
#include "bicrit/offline.h"
#include "bicrit/oracle.h"

namespace bicrit {

// ceil(delta^(2/3) T^(2/3) (ln T)^(1/3) / (2 N^(2/3))), at least 1.
// Throws std::domain_error unless delta > 0, T >= 2, N >= 1.
std::uint64_t exploration_reps(double delta, std::uint64_t horizon,
                               std::uint64_t n_calls);

// sqrt(h^2 ln T / (2m)). Throws std::domain_error unless h > 0, T >= 2,
// m >= 1.
double confidence_radius(double h, std::uint64_t horizon, std::uint64_t m);

// Pairwise sum of `values`.
double pairwise_sum(std::span<const double> values);
// Mean of a block of samples: the common value when every sample is equal,
// pairwise_sum / size otherwise.
double empirical_mean(std::span<const double> values);

enum class Phase { kExplore, kExploit };

struct Round {
  std::uint64_t t;  // 1-based
  ArmSet action;
  double sampled_f;
  double sampled_g;
  Phase phase;
};

struct QueryMeans {
  ArmSet set;
  double f_bar;
  double g_bar;
};

struct RunTrace {
  std::vector<Round> rounds;
  std::uint64_t m = 0;
  // Fully explored queries, in first-query order, with their block means.
  std::vector<QueryMeans> queries;
  ArmSet committed;
  std::uint64_t explore_rounds = 0;
  // Exploration ran into T before the offline algorithm returned.
  bool budget_exhausted = false;
  // The committed set is a fallback (last fully explored query), not an
  // offline output.
  bool committed_is_fallback = false;
  std::uint64_t instance_id = 0;
  std::vector<std::string> warnings;

  std::uint64_t horizon() const { return rounds.size(); }
  std::uint64_t exploit_rounds() const {
    return rounds.size() - explore_rounds;
  }
};

// Offline algorithm as seen by the online wrapper. The two oracles share one
// exploration cache: asking either about a set explores it once.
using OfflineAlgorithm =
    std::function<ArmSet(SetOracle& f_bar, SetOracle& g_bar)>;

// Runs the two phases for a fixed m. Offline InfeasibleError is rethrown with
// the phase in the message.
RunTrace explore_then_commit(std::uint64_t horizon, std::uint64_t m,
                             StochasticEnv& env,
                             const OfflineAlgorithm& offline);

struct RunConfig {
  std::uint64_t horizon = 0;
  ResilienceCert cert;
  StochasticEnv env;
  OfflineSpec offline;
  std::optional<std::uint64_t> m_override;
  std::uint64_t instance_id = 0;
  TieBreak tie = TieBreak::kLowestIndex;
};

// m from the certificate (or m_override), then explore_then_commit with the
// configured offline algorithm. A horizon below max{N, 2·sqrt(2)·N/delta} is
// reported in RunTrace::warnings.
RunTrace run_bicriteria_cmab(RunConfig& cfg);

// True iff every fully explored query has |f̄ − f| <= rad and |ḡ − g| <= rad.
bool clean_event(const RunTrace& trace, const StochasticEnv& env, double rad);

}  // namespace bicrit

#endif  // BICRIT_ONLINE_H_
