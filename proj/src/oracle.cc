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

#include "bicrit/oracle.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "bicrit/errors.h"

namespace bicrit {
namespace {

constexpr double kBandFraction = 0.99;
constexpr int kExhaustiveCheckArms = 12;

void check_below_h(const SetFunction& f, double h, std::string_view name) {
  if (f.n() <= kExhaustiveCheckArms) {
    const std::uint32_t count = 1u << f.n();
    for (std::uint32_t m = 0; m < count; ++m) {
      if (f.eval(ArmSet::from_mask(m)) > h) {
        throw InstanceError(std::string(name) + ": mean on set 0x" +
                            ArmSet::from_mask(m).to_hex() + " exceeds h");
      }
    }
  } else if (f.range_bound() > h) {
    throw InstanceError(std::string(name) + ": range bound exceeds h");
  }
}

}  // namespace

std::string_view to_string(PerturbMode mode) {
  switch (mode) {
    case PerturbMode::kNone:
      return "none";
    case PerturbMode::kWorstUp:
      return "worst-up";
    case PerturbMode::kWorstDown:
      return "worst-down";
    case PerturbMode::kUniformRandom:
      return "uniform-random";
  }
  return "unknown";
}

std::optional<PerturbMode> parse_perturb_mode(std::string_view text) {
  for (auto m : {PerturbMode::kNone, PerturbMode::kWorstUp,
                 PerturbMode::kWorstDown, PerturbMode::kUniformRandom}) {
    if (text == to_string(m)) return m;
  }
  return std::nullopt;
}

NoisyOracle::NoisyOracle(SetFunction base, double epsilon, PerturbMode mode,
                         RandomStream stream)
    : base_(std::move(base)),
      epsilon_(epsilon),
      mode_(mode),
      stream_(stream) {
  if (!(epsilon >= 0.0) || !std::isfinite(epsilon)) {
    throw std::domain_error("epsilon must be finite and >= 0");
  }
}

double NoisyOracle::value(ArmSet a) {
  if (auto it = memo_.find(a); it != memo_.end()) return it->second;
  const double exact = base_.eval(a);
  const double offset = kBandFraction * epsilon_;
  double v = exact;
  switch (mode_) {
    case PerturbMode::kNone:
      break;
    case PerturbMode::kWorstUp:
      v = exact + offset;
      break;
    case PerturbMode::kWorstDown:
      v = std::max(exact - offset, 0.0);
      break;
    case PerturbMode::kUniformRandom:
      v = exact + (2.0 * stream_.uniform() - 1.0) * offset;
      break;
  }
  memo_.emplace(a, v);
  query_log_.push_back(a);
  return v;
}

NoisyOracle eps_perturb(const SetFunction& f, double epsilon, PerturbMode mode,
                        std::uint64_t seed, std::string_view stream) {
  return NoisyOracle(f, epsilon, mode, RandomStream(seed, 0, stream));
}

std::string_view to_string(SampleDist dist) {
  switch (dist) {
    case SampleDist::kBernoulliScaled:
      return "bernoulli-scaled";
    case SampleDist::kPointMass:
      return "point-mass";
  }
  return "unknown";
}

std::optional<SampleDist> parse_sample_dist(std::string_view text) {
  if (text == "bernoulli-scaled" || text == "bernoulli") {
    return SampleDist::kBernoulliScaled;
  }
  if (text == "point-mass") return SampleDist::kPointMass;
  return std::nullopt;
}

StochasticEnv::StochasticEnv(SetFunction f_mean, SetFunction g_mean, double h,
                             SampleDist f_dist, SampleDist g_dist,
                             std::uint64_t seed, std::uint64_t horizon)
    : f_mean_(std::move(f_mean)),
      g_mean_(std::move(g_mean)),
      h_(h),
      f_dist_(f_dist),
      g_dist_(g_dist),
      reward_stream_(seed, horizon, "reward"),
      cost_stream_(seed, horizon, "cost") {
  if (!(h > 0.0) || !std::isfinite(h)) {
    throw InstanceError("h: must be positive and finite");
  }
  if (f_mean_.n() != g_mean_.n()) {
    throw InstanceError("objective and constraint have different arm counts");
  }
  check_below_h(f_mean_, h_, "objective");
  check_below_h(g_mean_, h_, "constraint");
}

double StochasticEnv::sample(ArmSet a, Feedback which) {
  const bool reward = which == Feedback::kReward;
  const double mean = (reward ? f_mean_ : g_mean_).eval(a);
  if ((reward ? f_dist_ : g_dist_) == SampleDist::kPointMass) return mean;
  RandomStream& stream = reward ? reward_stream_ : cost_stream_;
  return stream.bernoulli(mean / h_) ? h_ : 0.0;
}

StochasticEnv StochasticEnv::reseeded(std::uint64_t seed,
                                      std::uint64_t horizon) const {
  StochasticEnv copy = *this;
  copy.reward_stream_ = RandomStream(seed, horizon, "reward");
  copy.cost_stream_ = RandomStream(seed, horizon, "cost");
  return copy;
}

}  // namespace bicrit
