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

#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>
#include <vector>

#include "doctest.h"

#include "bicrit/certificate.h"
#include "bicrit/errors.h"
#include "bicrit/offline.h"
#include "bicrit/online.h"
#include "bicrit/oracle.h"
#include "test_support.h"

using namespace bicrit;

namespace {

StochasticEnv sc_env(SampleDist dist, std::uint64_t seed) {
  const SetFunction cost = SetFunction::modular({1.0, 1.0, 3.0});
  const SetFunction g = SetFunction::coverage(2, {{0}, {1}, {0, 1}});
  return StochasticEnv(cost, g, 5.0, dist, dist, seed);
}

ResilienceCert sc_cert() {
  InstanceConstants k;
  k.kappa = 2.0;
  k.omega = 0.5;
  k.n = 3;
  k.c_min = 1.0;
  k.c_max = 3.0;
  k.f_max = 5.0;
  return resilience_params(Problem::kSC, k);
}

OfflineSpec sc_spec() {
  OfflineSpec s;
  s.problem = Problem::kSC;
  s.kappa = 2.0;
  s.omega = 0.5;
  return s;
}

// Structural trace invariants. A run that hit the horizon mid-block also
// plays the partially explored set in its trailing explore rounds.
void check_trace_structure(const RunTrace& trace, std::uint64_t horizon) {
  REQUIRE(trace.rounds.size() == horizon);
  REQUIRE(trace.explore_rounds + trace.exploit_rounds() == horizon);
  const std::uint64_t full = trace.m * trace.queries.size();
  if (trace.budget_exhausted) {
    REQUIRE(trace.explore_rounds == horizon);
    REQUIRE(full <= horizon);
  } else {
    REQUIRE(trace.explore_rounds == full);
  }
  std::set<ArmSet> allowed = {trace.committed};
  for (const QueryMeans& q : trace.queries) allowed.insert(q.set);
  if (full < trace.explore_rounds) {
    const ArmSet partial = trace.rounds[full].action;
    REQUIRE(allowed.count(partial) == 0);
    for (std::uint64_t i = full; i < trace.explore_rounds; ++i) {
      REQUIRE(trace.rounds[i].action == partial);
    }
    allowed.insert(partial);
  }
  for (std::uint64_t i = 0; i < horizon; ++i) {
    const Round& r = trace.rounds[i];
    REQUIRE(r.t == i + 1);
    REQUIRE(allowed.count(r.action) == 1);
    REQUIRE((r.phase == Phase::kExplore) == (i < trace.explore_rounds));
    if (r.phase == Phase::kExploit) REQUIRE(r.action == trace.committed);
  }
  for (std::size_t q = 0; q < trace.queries.size(); ++q) {
    std::vector<double> f, g;
    for (std::uint64_t k = 0; k < trace.m; ++k) {
      const Round& r = trace.rounds[q * trace.m + k];
      REQUIRE(r.action == trace.queries[q].set);
      f.push_back(r.sampled_f);
      g.push_back(r.sampled_g);
    }
    REQUIRE(empirical_mean(f) == trace.queries[q].f_bar);
    REQUIRE(empirical_mean(g) == trace.queries[q].g_bar);
  }
}

}  // namespace

TEST_CASE("exploration budget") {
  CHECK(exploration_reps(1.0, 4096, 4) == 103);
  CHECK(exploration_reps(1.0, 8, 8) == 1);
  std::uint64_t prev = 0;
  for (std::uint64_t t = 2; t < 200000; t = t * 3 / 2 + 1) {
    const std::uint64_t m = exploration_reps(2.5, t, 9);
    REQUIRE(m >= prev);
    prev = m;
  }
  CHECK_THROWS_AS(exploration_reps(0.0, 10, 1), std::domain_error);
  CHECK_THROWS_AS(exploration_reps(1.0, 1, 1), std::domain_error);
  CHECK_THROWS_AS(exploration_reps(1.0, 10, 0), std::domain_error);
}

TEST_CASE("confidence radius") {
  CHECK(confidence_radius(1.0, 4096, 103) ==
        doctest::Approx(0.20094154787819798).epsilon(1e-14));
  // ln T = 2m makes the radius equal h. T = e^2 is not an integer, so use
  // m = ln(T)/2 exactly via T = 4096 and a scaled h instead.
  const double ln_t = std::log(4096.0);
  CHECK(confidence_radius(2.0, 4096, 1) ==
        doctest::Approx(2.0 * std::sqrt(ln_t / 2.0)));
  CHECK(confidence_radius(1.5, 4096, 40) ==
        doctest::Approx(confidence_radius(1.5, 4096, 10) / 2.0));
  CHECK_THROWS_AS(confidence_radius(0.0, 10, 1), std::domain_error);
  CHECK_THROWS_AS(confidence_radius(1.0, 1, 1), std::domain_error);
  CHECK_THROWS_AS(confidence_radius(1.0, 10, 0), std::domain_error);
}

TEST_CASE("empirical means") {
  const std::vector<double> equal(103, 0.1);
  CHECK(empirical_mean(equal) == 0.1);
  std::vector<double> v;
  for (int i = 0; i < 37; ++i) v.push_back(i % 3 == 0 ? 2.0 : 0.0);
  CHECK(empirical_mean(v) == doctest::Approx(26.0 / 37.0));
  CHECK(pairwise_sum(v) == 26.0);
  CHECK_THROWS_AS(empirical_mean(std::vector<double>{}), std::domain_error);
}

TEST_CASE("stub offline algorithm gives the documented phase split") {
  StochasticEnv env = sc_env(SampleDist::kBernoulliScaled, 3);
  const ArmSet q1 = ArmSet::of({0});
  const ArmSet q2 = ArmSet::of({1, 2});
  OfflineAlgorithm stub = [&](SetOracle& f_bar, SetOracle& g_bar) {
    f_bar.value(q1);
    g_bar.value(q2);
    g_bar.value(q1);  // cached, no new exploration
    return q2;
  };
  const RunTrace trace = explore_then_commit(100, 7, env, stub);
  CHECK(trace.explore_rounds == 14);
  CHECK(trace.exploit_rounds() == 86);
  CHECK(trace.queries.size() == 2);
  CHECK(trace.committed == q2);
  CHECK_FALSE(trace.budget_exhausted);
  check_trace_structure(trace, 100);
}

TEST_CASE("budget exhaustion commits to the last full query") {
  StochasticEnv env = sc_env(SampleDist::kBernoulliScaled, 3);
  OfflineAlgorithm stub = [&](SetOracle& f_bar, SetOracle&) {
    for (std::uint32_t m = 1; m < 8; ++m) f_bar.value(ArmSet::from_mask(m));
    return ArmSet::from_mask(7);
  };
  const RunTrace trace = explore_then_commit(20, 6, env, stub);
  CHECK(trace.budget_exhausted);
  CHECK(trace.committed_is_fallback);
  CHECK(trace.queries.size() == 3);
  CHECK(trace.committed == ArmSet::from_mask(3));
  CHECK(trace.explore_rounds == 20);
  CHECK(trace.rounds.size() == 20);

  // Even the first block does not fit: commit to the empty set.
  StochasticEnv env2 = sc_env(SampleDist::kBernoulliScaled, 3);
  const RunTrace tiny = explore_then_commit(4, 6, env2, stub);
  CHECK(tiny.budget_exhausted);
  CHECK(tiny.committed.empty());
}

TEST_CASE("offline infeasibility carries the phase") {
  StochasticEnv env = sc_env(SampleDist::kPointMass, 1);
  RunConfig cfg{4096, sc_cert(), env, sc_spec(), std::uint64_t{10}, 0,
                TieBreak::kLowestIndex};
  cfg.offline.kappa = 9.0;
  cfg.offline.omega = 0.5;
  try {
    run_bicriteria_cmab(cfg);
    FAIL("expected infeasibility");
  } catch (const InfeasibleError& e) {
    CHECK(std::string(e.what()).find("exploration phase") !=
          std::string::npos);
  }
}

TEST_CASE("point-mass runs reproduce the offline output") {
  RunConfig cfg{4096, sc_cert(), sc_env(SampleDist::kPointMass, 1), sc_spec(),
                std::uint64_t{50}, 42, TieBreak::kLowestIndex};
  const RunTrace trace = run_bicriteria_cmab(cfg);
  CHECK(trace.committed == ArmSet::of({0, 1}));
  CHECK_FALSE(trace.committed_is_fallback);
  CHECK(trace.instance_id == 42);
  CHECK(trace.m == 50);
  CHECK(clean_event(trace, cfg.env, 0.0));
  check_trace_structure(trace, 4096);

  // With the certificate's own m (delta = 630) the horizon is far too short.
  RunConfig short_cfg{4096, sc_cert(), sc_env(SampleDist::kPointMass, 1),
                      sc_spec(), std::nullopt, 42, TieBreak::kLowestIndex};
  const RunTrace cut = run_bicriteria_cmab(short_cfg);
  CHECK(cut.m == exploration_reps(630.0, 4096, 9));
  CHECK(cut.budget_exhausted);
  check_trace_structure(cut, 4096);

  RandomStream rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = testing::uniform_int(rng, 2, 8);
    const SetFunction cost = testing::random_modular(rng, n, 1.0, 5.0);
    const SetFunction g = testing::random_coverage(rng, n, 10, 0.3);
    OfflineSpec spec;
    spec.problem = Problem::kSC;
    spec.kappa = 0.6 * g.range_bound();
    spec.omega = spec.kappa / 4.0;
    NoisyOracle exact = exact_oracle(g);
    const ArmSet direct = mintss_run(cost, exact, spec.kappa, spec.omega)
                              .selected;
    const double h = std::max(cost.range_bound(), g.range_bound());
    RunConfig c{20000, sc_cert(),
                StochasticEnv(cost, g, h, SampleDist::kPointMass,
                              SampleDist::kPointMass, trial),
                spec, std::uint64_t{3}, 0, TieBreak::kLowestIndex};
    const RunTrace t = run_bicriteria_cmab(c);
    REQUIRE(t.committed == direct);
    REQUIRE(t.queries.size() == exact.query_log().size());
  }
}

TEST_CASE("bernoulli runs are deterministic and well formed") {
  auto make = [] {
    return RunConfig{1 << 14, sc_cert(),
                     sc_env(SampleDist::kBernoulliScaled, 7), sc_spec(),
                     std::uint64_t{400}, 0, TieBreak::kLowestIndex};
  };
  RunConfig c1 = make();
  RunConfig c2 = make();
  const RunTrace a = run_bicriteria_cmab(c1);
  const RunTrace b = run_bicriteria_cmab(c2);
  REQUIRE(a.rounds.size() == b.rounds.size());
  for (std::size_t i = 0; i < a.rounds.size(); ++i) {
    REQUIRE(a.rounds[i].action == b.rounds[i].action);
    REQUIRE(a.rounds[i].sampled_f == b.rounds[i].sampled_f);
    REQUIRE(a.rounds[i].sampled_g == b.rounds[i].sampled_g);
  }
  CHECK(a.committed == b.committed);
  CHECK_FALSE(a.budget_exhausted);
  check_trace_structure(a, 1 << 14);
  CHECK(a.queries.size() <= sc_cert().n_calls);
}

TEST_CASE("fsm runs read the objective oracle") {
  OfflineSpec spec;
  spec.problem = Problem::kFSM;
  spec.kappa = 2.0;
  spec.omega = 1.0;
  spec.fairness = Fairness{{0, 0, 1, 1}, {0, 0}, {1, 1}};
  const SetFunction f = SetFunction::coverage(3, {{0, 1}, {0}, {2}, {1, 2}});
  const SetFunction g = SetFunction::modular({1.0, 1.0, 1.0, 1.0});
  InstanceConstants k;
  k.kappa = 2.0;
  k.omega = 1.0;
  k.n = 4;
  RunConfig cfg{5000, resilience_params(Problem::kFSM, k),
                StochasticEnv(f, g, 4.0, SampleDist::kPointMass,
                              SampleDist::kPointMass, 1),
                spec, std::nullopt, 0, TieBreak::kLowestIndex};
  const RunTrace trace = run_bicriteria_cmab(cfg);
  CHECK(trace.committed == ArmSet::of({0, 2}));
  CHECK(trace.queries.size() <= 8);
}

TEST_CASE("short horizons raise warnings") {
  RunConfig cfg{16, sc_cert(), sc_env(SampleDist::kBernoulliScaled, 1),
                sc_spec(), std::nullopt, 0, TieBreak::kLowestIndex};
  const RunTrace trace = run_bicriteria_cmab(cfg);
  CHECK(trace.warnings.size() >= 2);
  CHECK(trace.rounds.size() == 16);
}
