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
#include <stdexcept>
#include <utility>
#include <vector>

#include "doctest.h"

#include "bicrit/certificate.h"
#include "bicrit/errors.h"
#include "bicrit/eval.h"
#include "bicrit/offline.h"
#include "bicrit/online.h"
#include "bicrit/oracle.h"
#include "test_support.h"

using namespace bicrit;

namespace {

RunTrace flat_trace(std::vector<double> f, std::vector<double> g,
                    std::uint64_t explore, std::uint64_t id) {
  RunTrace t;
  for (std::size_t i = 0; i < f.size(); ++i) {
    t.rounds.push_back({i + 1, ArmSet::of({0}), f[i], g[i],
                        i < explore ? Phase::kExplore : Phase::kExploit});
  }
  t.explore_rounds = explore;
  t.instance_id = id;
  return t;
}

ResilienceCert cert_of(double alpha, double beta, Sense sense) {
  ResilienceCert c;
  c.alpha = alpha;
  c.beta = beta;
  c.delta = 1.0;
  c.n_calls = 4;
  c.sense = sense;
  return c;
}

}  // namespace

TEST_CASE("brute force optimum examples") {
  const SetFunction cost = SetFunction::modular({1.0, 1.0, 3.0});
  const SetFunction g = SetFunction::coverage(2, {{0}, {1}, {0, 1}});
  const OptResult opt = brute_force_opt(cost, g, 2.0, Sense::kMinimize,
                                        ConstraintDir::kAtLeast);
  CHECK(opt.opt_set == ArmSet::of({0, 1}));
  CHECK(opt.opt_objective == 2.0);
  CHECK(opt.feasible_count == 5);

  const OptResult zero = brute_force_opt(cost, g, 0.0, Sense::kMinimize,
                                         ConstraintDir::kAtLeast);
  CHECK(zero.opt_set.empty());
  CHECK(zero.opt_objective == 0.0);

  CHECK_THROWS_AS(brute_force_opt(cost, g, 3.0, Sense::kMinimize,
                                  ConstraintDir::kAtLeast),
                  InfeasibleError);
  std::vector<double> many(23, 1.0);
  const SetFunction big = SetFunction::modular(many);
  CHECK_THROWS_AS(brute_force_opt(big, big, 1.0, Sense::kMaximize,
                                  ConstraintDir::kAtMost),
                  CapabilityError);
}

TEST_CASE("brute force agrees with a gray-code enumeration") {
  RandomStream rng(14);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = testing::uniform_int(rng, 1, 12);
    const SetFunction f = testing::random_weighted_coverage(rng, n, 12, 0.3,
                                                            0.5, 2.0);
    const SetFunction g = testing::random_modular(rng, n, 1.0, 5.0);
    const bool maximize = trial % 2 == 0;
    const double kappa = maximize ? 0.4 * g.range_bound()
                                  : 0.6 * g.range_bound();
    const Sense sense = maximize ? Sense::kMaximize : Sense::kMinimize;
    const ConstraintDir dir = maximize ? ConstraintDir::kAtMost
                                       : ConstraintDir::kAtLeast;
    // In the min case the roles swap: minimize the modular cost subject to
    // coverage, matching the cover problems.
    const SetFunction& obj = maximize ? f : g;
    const SetFunction& con = maximize ? g : f;
    const double k = maximize ? kappa : 0.6 * f.range_bound();
    const OptResult opt = brute_force_opt(obj, con, k, sense, dir);
    const testing::GrayOpt gray = testing::gray_code_opt(
        n, [&](std::uint32_t m) { return obj.eval(ArmSet::from_mask(m)); },
        [&](std::uint32_t m) {
          const double v = con.eval(ArmSet::from_mask(m));
          return maximize ? v <= k : v >= k;
        },
        maximize);
    REQUIRE(gray.found);
    REQUIRE(opt.opt_objective == gray.value);
    REQUIRE(opt.opt_set.mask() == gray.mask);
    REQUIRE(opt.feasible_count == gray.feasible);
  }
}

TEST_CASE("fsm brute force over matroid members") {
  OfflineSpec s;
  s.problem = Problem::kFSM;
  s.kappa = 2.0;
  s.omega = 1.0;
  s.fairness = Fairness{{0, 0, 1, 1}, {0, 0}, {1, 1}};
  const SetFunction f = SetFunction::coverage(3, {{0, 1}, {0}, {2}, {1, 2}});
  const OptResult opt = brute_force_opt(f, FairnessMatroid::strict(s, 4), 2);
  CHECK(opt.opt_objective == 3.0);
  CHECK(opt.feasible_count == 4);
  CHECK(opt.sense == Sense::kMaximize);
}

TEST_CASE("regret and ccv by hand") {
  OptResult opt;
  opt.opt_objective = 1.0;
  opt.sense = Sense::kMaximize;
  opt.instance_id = 5;
  const RunTrace t = flat_trace({0.6, 0.6, 0.6}, {0.5, 0.5, 0.5}, 1, 5);
  const RegretReport r =
      regret_ccv(t, opt, cert_of(0.5, 1.0, Sense::kMaximize), 0.4);
  CHECK(r.regret_f == doctest::Approx(-0.3));
  CHECK(r.ccv_g == doctest::Approx(0.3));
  CHECK(r.regret_explore + r.regret_exploit == r.regret_f);
  CHECK(r.ccv_explore + r.ccv_exploit == r.ccv_g);

  // Min sense mirrors the signs.
  OptResult min_opt = opt;
  min_opt.sense = Sense::kMinimize;
  const RegretReport m =
      regret_ccv(t, min_opt, cert_of(2.0, 0.5, Sense::kMinimize), 2.0);
  CHECK(m.regret_f == doctest::Approx(1.8 - 6.0));
  CHECK(m.ccv_g == doctest::Approx(3.0 - 1.5));

  // Playing OPT forever with exact samples.
  const RunTrace perfect = flat_trace({1.0, 1.0, 1.0, 1.0}, {0.4, 0.4, 0.4, 0.4},
                                      0, 5);
  CHECK(regret_ccv(perfect, opt, cert_of(1.0, 1.0, Sense::kMaximize), 0.4)
            .regret_f == 0.0);

  RunTrace other = t;
  other.instance_id = 6;
  CHECK_THROWS_AS(
      regret_ccv(other, opt, cert_of(0.5, 1.0, Sense::kMaximize), 0.4),
      ContractError);
  CHECK_THROWS_AS(
      regret_ccv(t, opt, cert_of(0.5, 1.0, Sense::kMinimize), 0.4),
      ContractError);
}

TEST_CASE("reference bound") {
  const ResilienceCert c = cert_of(1.0, 1.0, Sense::kMaximize);
  CHECK(theoretical_bound(c, 1.0, 4096) ==
        doctest::Approx(2470.1127999858763).epsilon(1e-13));
  CHECK(theoretical_bound(c, 2.0, 4096) ==
        doctest::Approx(2.0 * theoretical_bound(c, 1.0, 4096)));
  const double ratio =
      theoretical_bound(c, 1.0, 8 * 4096) / theoretical_bound(c, 1.0, 4096);
  CHECK(ratio == doctest::Approx(4.308869380063768).epsilon(1e-13));
  CHECK(ratio == doctest::Approx(
                     4.0 * std::cbrt(std::log(8.0 * 4096) / std::log(4096.0))));
  CHECK_THROWS_AS(theoretical_bound(c, 1.0, 1), std::domain_error);
  CHECK_THROWS_AS(theoretical_bound(c, 1.0, 10, 0.0), std::domain_error);
}

TEST_CASE("scaling exponent fits") {
  std::vector<std::pair<double, double>> exact, synthetic, flat;
  for (int e = 12; e <= 17; ++e) {
    const double t = std::ldexp(1.0, e);
    exact.emplace_back(t, 5.0 * std::cbrt(t * t));
    synthetic.emplace_back(t, 3.0 * std::cbrt(t * t) * std::cbrt(std::log(t)));
    flat.emplace_back(t, 7.0);
  }
  CHECK(std::abs(scaling_exponent(exact).slope - 2.0 / 3.0) < 1e-9);
  const double s = scaling_exponent(synthetic).slope;
  CHECK(s == doctest::Approx(0.7001020783026048).epsilon(1e-12));
  CHECK(s >= 0.66);
  CHECK(s <= 0.73);
  CHECK(std::abs(scaling_exponent(flat).slope) < 1e-12);

  auto with_bad = exact;
  with_bad[0].second = -1.0;
  const ScalingFit fit = scaling_exponent(with_bad);
  CHECK(fit.used_points == 5);
  CHECK(fit.warnings.size() == 1);
  with_bad[1].second = 0.0;
  with_bad[2].second = -3.0;
  CHECK_THROWS_AS(scaling_exponent(with_bad), std::domain_error);
}

TEST_CASE("clean event rate") {
  const SetFunction f = SetFunction::coverage(4, {{0}, {1}, {2}, {3}});
  const std::vector<ArmSet> queries = {ArmSet::of({0}), ArmSet::of({1}),
                                       ArmSet::of({0, 2}), ArmSet::of({3})};
  StochasticEnv exact(f, f, 4.0, SampleDist::kPointMass,
                      SampleDist::kPointMass, 1);
  CHECK(clean_event_rate(exact, queries, 5, 4096, 100, 1) == 1.0);
  StochasticEnv noisy(f, f, 4.0, SampleDist::kBernoulliScaled,
                      SampleDist::kBernoulliScaled, 1);
  CHECK_THROWS_AS(clean_event_rate(noisy, queries, 5, 4096, 99, 1),
                  std::domain_error);
  // Same inputs, any worker count: identical rate.
  const double r1 = clean_event_rate(noisy, queries, 20, 4096, 300, 9, 1);
  const double r4 = clean_event_rate(noisy, queries, 20, 4096, 300, 9, 4);
  CHECK(r1 == r4);
  // rad and the spread of an m-sample mean both scale as 1/sqrt(m), so at a
  // fixed T the rate is not monotone in m; it stays above 1 - 4N/T though.
  for (std::uint64_t m : {6, 12, 48, 200}) {
    for (std::uint64_t s = 0; s < 3; ++s) {
      const double p = clean_event_rate(noisy, queries, m, 64, 400, s);
      const double slack = 3.0 * std::sqrt(p * (1.0 - p) / 400.0);
      CHECK(p >= 1.0 - 16.0 / 64.0 - slack);
    }
  }
}

TEST_CASE("density bound witness") {
  const SetFunction cost = SetFunction::modular({1.0, 1.0, 3.0});
  const SetFunction g = SetFunction::coverage(2, {{0}, {1}, {0, 1}});
  CHECK(density_bound_witness(g, cost, ArmSet(), 2.0, 2.0) == 0);
  // Already at the threshold: first arm outside S qualifies.
  CHECK(density_bound_witness(g, cost, ArmSet::of({2}), 2.0, 2.0) == 0);
  CHECK_THROWS_AS(density_bound_witness(g, g, ArmSet(), 2.0, 2.0),
                  ContractError);
  // A wrong opt_cost (smaller than the true optimum) can break the lemma.
  CHECK_THROWS_AS(density_bound_witness(g, cost, ArmSet(), 2.0, 0.5),
                  InvariantViolation);

  RandomStream rng(2);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = testing::uniform_int(rng, 2, 10);
    const SetFunction c = testing::random_modular(rng, n, 1.0, 5.0);
    const SetFunction gg = testing::random_coverage(rng, n, 10, 0.3);
    const double kappa = testing::uniform(rng, 0.2, 1.0) * gg.range_bound();
    const OptResult opt = brute_force_opt(c, gg, kappa, Sense::kMinimize,
                                          ConstraintDir::kAtLeast);
    const ArmSet s = ArmSet::from_mask(static_cast<std::uint32_t>(
        rng.below((1u << n) - 1)));
    if (opt.opt_objective <= 0.0 || s == ArmSet::full(n)) continue;
    REQUIRE_NOTHROW(density_bound_witness(gg, c, s, kappa, opt.opt_objective));
  }
}

TEST_CASE("log gap inequality") {
  CHECK(log_gap_check(3.0, 0.0));
  CHECK(log_gap_check(1.0, 0.5));
  for (double a : {0.1, 1.0, 10.0}) {
    for (int k = 1; k <= 79; ++k) {
      REQUIRE(log_gap_check(a, a * k / 100.0));
    }
  }
  CHECK_THROWS_AS(log_gap_check(1.0, 0.8), std::domain_error);
  CHECK_THROWS_AS(log_gap_check(0.0, 0.0), std::domain_error);
  CHECK_THROWS_AS(log_gap_check(1.0, -0.1), std::domain_error);
}
