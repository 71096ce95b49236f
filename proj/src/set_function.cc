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

#include "bicrit/set_function.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <unordered_set>

#include "bicrit/errors.h"

namespace bicrit {
namespace {

void check_arm_count(std::size_t n, std::string_view field) {
  if (n == 0 || n > static_cast<std::size_t>(kMaxArms)) {
    throw InstanceError(std::string(field) + ": arm count " +
                        std::to_string(n) + " outside [1, 30]");
  }
}

}  // namespace

GroundSet::GroundSet(int n, std::vector<std::string> labels)
    : n_(n), labels_(std::move(labels)) {
  if (n < 1 || n > kMaxArms) {
    throw InstanceError("n: " + std::to_string(n) + " outside [1, 30]");
  }
  if (!labels_.empty()) {
    if (static_cast<int>(labels_.size()) != n) {
      throw InstanceError("labels: expected " + std::to_string(n) +
                          " entries, got " + std::to_string(labels_.size()));
    }
    std::unordered_set<std::string> seen;
    for (const auto& l : labels_) {
      if (!seen.insert(l).second) {
        throw InstanceError("labels: duplicate label '" + l + "'");
      }
    }
  }
}

std::string GroundSet::label(Arm x) const {
  if (x < 0 || x >= n_) throw std::out_of_range("arm index out of range");
  return labels_.empty() ? std::to_string(x) : labels_[x];
}

std::string_view to_string(SetFunctionKind kind) {
  switch (kind) {
    case SetFunctionKind::kCoverage:
      return "coverage";
    case SetFunctionKind::kWeightedCoverage:
      return "weighted-coverage";
    case SetFunctionKind::kModular:
      return "modular";
  }
  return "unknown";
}

SetFunction SetFunction::coverage(int universe_size,
                                  const std::vector<std::vector<int>>& covers) {
  if (universe_size < 1) throw InstanceError("universe: empty universe");
  auto f = weighted_coverage(
      std::vector<double>(static_cast<std::size_t>(universe_size), 1.0),
      covers);
  f.kind_ = SetFunctionKind::kCoverage;
  return f;
}

SetFunction SetFunction::weighted_coverage(
    std::vector<double> weights, const std::vector<std::vector<int>>& covers) {
  if (weights.empty()) throw InstanceError("weights: empty universe");
  check_arm_count(covers.size(), "covers");
  for (std::size_t e = 0; e < weights.size(); ++e) {
    if (!(weights[e] > 0.0) || !std::isfinite(weights[e])) {
      throw InstanceError("weights[" + std::to_string(e) +
                          "]: weight must be positive and finite");
    }
  }
  const std::size_t words = (weights.size() + 63) / 64;
  auto cov = std::make_shared<Coverage>();
  cov->unit_weights =
      std::all_of(weights.begin(), weights.end(),
                  [](double w) { return w == 1.0; });
  cov->incidence.assign(covers.size(), std::vector<std::uint64_t>(words, 0));
  for (std::size_t x = 0; x < covers.size(); ++x) {
    if (covers[x].empty()) {
      throw InstanceError("covers[" + std::to_string(x) +
                          "]: arm covers no element");
    }
    for (int e : covers[x]) {
      if (e < 0 || static_cast<std::size_t>(e) >= weights.size()) {
        throw InstanceError("covers[" + std::to_string(x) + "]: element " +
                            std::to_string(e) + " outside the universe");
      }
      cov->incidence[x][e / 64] |= std::uint64_t{1} << (e % 64);
    }
  }
  cov->weights = std::move(weights);

  SetFunction f;
  f.kind_ = SetFunctionKind::kWeightedCoverage;
  f.n_ = static_cast<int>(covers.size());
  f.flags_ = {.monotone = true, .submodular = true};
  f.coverage_ = std::move(cov);
  f.range_bound_ = f.raw_eval(ArmSet::full(f.n_));
  return f;
}

SetFunction SetFunction::modular(std::vector<double> costs) {
  check_arm_count(costs.size(), "costs");
  for (std::size_t x = 0; x < costs.size(); ++x) {
    if (!(costs[x] > 0.0) || !std::isfinite(costs[x])) {
      throw InstanceError("costs[" + std::to_string(x) +
                          "]: cost must be positive and finite");
    }
  }
  SetFunction f;
  f.kind_ = SetFunctionKind::kModular;
  f.n_ = static_cast<int>(costs.size());
  // Modular functions are both monotone (positive costs) and submodular.
  f.flags_ = {.monotone = true, .submodular = true};
  f.costs_ = std::make_shared<const std::vector<double>>(std::move(costs));
  f.range_bound_ = f.raw_eval(ArmSet::full(f.n_));
  return f;
}

double SetFunction::raw_eval(ArmSet a) const {
  if (kind_ == SetFunctionKind::kModular) {
    double sum = 0.0;
    for (std::uint32_t m = a.mask(); m != 0; m &= m - 1) {
      sum += (*costs_)[std::countr_zero(m)];
    }
    return sum;
  }
  const auto& cov = *coverage_;
  const std::size_t words = cov.incidence.empty() ? 0 : cov.incidence[0].size();
  std::uint64_t small[4] = {0, 0, 0, 0};
  std::vector<std::uint64_t> big;
  std::uint64_t* acc = small;
  if (words > 4) {
    big.assign(words, 0);
    acc = big.data();
  }
  for (std::uint32_t m = a.mask(); m != 0; m &= m - 1) {
    const auto& inc = cov.incidence[std::countr_zero(m)];
    for (std::size_t w = 0; w < words; ++w) acc[w] |= inc[w];
  }
  double sum = 0.0;
  if (cov.unit_weights) {
    std::uint64_t count = 0;
    for (std::size_t w = 0; w < words; ++w) count += std::popcount(acc[w]);
    return static_cast<double>(count);
  }
  for (std::size_t w = 0; w < words; ++w) {
    for (std::uint64_t bits = acc[w]; bits != 0; bits &= bits - 1) {
      sum += cov.weights[w * 64 + std::countr_zero(bits)];
    }
  }
  return sum;
}

double SetFunction::eval(ArmSet a) const {
  if ((static_cast<std::uint64_t>(a.mask()) >> n_) != 0) {
    throw std::out_of_range("set 0x" + a.to_hex() +
                            " uses an arm index >= n = " + std::to_string(n_));
  }
  return std::min(raw_eval(a), cap_);
}

std::span<const double> SetFunction::costs() const {
  if (kind_ != SetFunctionKind::kModular) {
    throw ContractError("costs(): function is " +
                        std::string(to_string(kind_)) + ", not modular");
  }
  return *costs_;
}

double marginal_gain(const SetFunction& f, ArmSet a, Arm x) {
  if (a.contains(x)) {
    throw std::domain_error("marginal_gain: arm " + std::to_string(x) +
                            " already in the set");
  }
  return f.eval(a.with(x)) - f.eval(a);
}

SetFunction threshold_cap(const SetFunction& f, double kappa) {
  if (!(kappa >= 0.0)) {
    throw std::domain_error("threshold_cap: kappa must be >= 0");
  }
  SetFunction capped = f;
  capped.cap_ = std::min(f.cap_, kappa);
  capped.range_bound_ = std::min(f.range_bound_, kappa);
  return capped;
}

}  // namespace bicrit
