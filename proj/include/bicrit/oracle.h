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

#ifndef BICRIT_ORACLE_H_
#define BICRIT_ORACLE_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "bicrit/arm_set.h"
#include "bicrit/rng.h"
#include "bicrit/set_function.h"

namespace bicrit {

// What an offline algorithm sees of a stochastic set function: a value per
// queried set. Implementations are stateful and single-owner.
class SetOracle {
 public:
  virtual ~SetOracle() = default;
  virtual double value(ArmSet a) = 0;
};

enum class PerturbMode { kNone, kWorstUp, kWorstDown, kUniformRandom };

std::string_view to_string(PerturbMode mode);
std::optional<PerturbMode> parse_perturb_mode(std::string_view text);

// An ε-approximate oracle f̂ with |f̂(A) − f(A)| < ε. Worst-case modes sit at
// 0.99·ε off the true value; worst-down clamps at 0. Each distinct set is
// evaluated once and memoized, so the caller sees one fixed function.
class NoisyOracle : public SetOracle {
 public:
  NoisyOracle(SetFunction base, double epsilon, PerturbMode mode,
              RandomStream stream = RandomStream());

  double value(ArmSet a) override;

  const SetFunction& base() const { return base_; }
  double epsilon() const { return epsilon_; }
  PerturbMode mode() const { return mode_; }
  // Distinct sets in first-query order.
  const std::vector<ArmSet>& query_log() const { return query_log_; }

 private:
  SetFunction base_;
  double epsilon_;
  PerturbMode mode_;
  RandomStream stream_;
  std::unordered_map<ArmSet, double> memo_;
  std::vector<ArmSet> query_log_;
};

// Throws std::domain_error for negative or non-finite epsilon.
NoisyOracle eps_perturb(const SetFunction& f, double epsilon, PerturbMode mode,
                        std::uint64_t seed = 0,
                        std::string_view stream = "perturb");

// An exact oracle that still records its distinct queries.
inline NoisyOracle exact_oracle(const SetFunction& f) {
  return NoisyOracle(f, 0.0, PerturbMode::kNone);
}

enum class SampleDist { kBernoulliScaled, kPointMass };

std::string_view to_string(SampleDist dist);
std::optional<SampleDist> parse_sample_dist(std::string_view text);

enum class Feedback { kReward, kCost };

// Bandit feedback source. Playing A yields an independent reward sample with
// mean f(A) and cost sample with mean g(A), both in [0, h].
//
// bernoulli-scaled: h with probability mean/h, else 0.
// point-mass: exactly the mean.
class StochasticEnv {
 public:
  // Throws InstanceError if h is not positive or a mean can exceed h
  // (checked on every set for n <= 12, via range bounds otherwise).
  StochasticEnv(SetFunction f_mean, SetFunction g_mean, double h,
                SampleDist f_dist, SampleDist g_dist, std::uint64_t seed,
                std::uint64_t horizon = 0);

  double sample(ArmSet a, Feedback which);

  const SetFunction& f_mean() const { return f_mean_; }
  const SetFunction& g_mean() const { return g_mean_; }
  double h() const { return h_; }
  SampleDist f_dist() const { return f_dist_; }
  SampleDist g_dist() const { return g_dist_; }

  // Same functions and distributions on fresh streams.
  StochasticEnv reseeded(std::uint64_t seed, std::uint64_t horizon = 0) const;

 private:
  SetFunction f_mean_;
  SetFunction g_mean_;
  double h_;
  SampleDist f_dist_;
  SampleDist g_dist_;
  RandomStream reward_stream_;
  RandomStream cost_stream_;
};

inline double noisy_sample(StochasticEnv& env, ArmSet a, Feedback which) {
  return env.sample(a, which);
}

}  // namespace bicrit

#endif  // BICRIT_ORACLE_H_
