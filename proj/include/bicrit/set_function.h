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

#ifndef BICRIT_SET_FUNCTION_H_
#define BICRIT_SET_FUNCTION_H_

#include <cstdint>
#include <limits>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bicrit/arm_set.h"

namespace bicrit {

// The n base arms of an instance.
class GroundSet {
 public:
  // Throws InstanceError unless 1 <= n <= 30 and labels (if given) are n
  // distinct strings.
  explicit GroundSet(int n, std::vector<std::string> labels = {});

  int n() const { return n_; }
  const std::vector<std::string>& labels() const { return labels_; }
  ArmSet full() const { return ArmSet::full(n_); }
  // Label of arm x, or its decimal index when unlabeled.
  std::string label(Arm x) const;

 private:
  int n_;
  std::vector<std::string> labels_;
};

enum class SetFunctionKind { kCoverage, kWeightedCoverage, kModular };

std::string_view to_string(SetFunctionKind kind);

struct FunctionFlags {
  bool monotone = false;
  bool submodular = false;
};

// A deterministic, normalized, monotone set function. Coverage kinds sum the
// weights of the elements covered by the arms in a set; the modular kind sums
// per-arm costs. An optional cap turns f into min(f, cap).
//
// Immutable after construction; copies share the payload.
class SetFunction {
 public:
  // Unit element weights over a universe of `universe_size` elements.
  // covers[x] lists the elements arm x covers.
  static SetFunction coverage(int universe_size,
                              const std::vector<std::vector<int>>& covers);
  static SetFunction weighted_coverage(
      std::vector<double> weights, const std::vector<std::vector<int>>& covers);
  static SetFunction modular(std::vector<double> costs);

  SetFunctionKind kind() const { return kind_; }
  int n() const { return n_; }
  double range_bound() const { return range_bound_; }
  FunctionFlags flags() const { return flags_; }
  bool capped() const { return cap_ < std::numeric_limits<double>::infinity(); }
  double cap() const { return cap_; }

  // Throws std::out_of_range if `a` uses an arm index >= n.
  double eval(ArmSet a) const;
  // eval({x}).
  double singleton(Arm x) const { return eval(ArmSet::of({x})); }

  // Per-arm costs; only meaningful for the uncapped modular kind.
  std::span<const double> costs() const;

 private:
  struct Coverage {
    std::vector<double> weights;
    // Per-arm incidence as 64-bit words over the element universe.
    std::vector<std::vector<std::uint64_t>> incidence;
    bool unit_weights = false;
  };

  SetFunction() = default;
  double raw_eval(ArmSet a) const;

  SetFunctionKind kind_ = SetFunctionKind::kModular;
  int n_ = 0;
  double range_bound_ = 0.0;
  FunctionFlags flags_;
  double cap_ = std::numeric_limits<double>::infinity();
  std::shared_ptr<const Coverage> coverage_;
  std::shared_ptr<const std::vector<double>> costs_;

  friend SetFunction threshold_cap(const SetFunction& f, double kappa);
};

// f(A ∪ {x}) − f(A). Throws std::domain_error if x ∈ A.
double marginal_gain(const SetFunction& f, ArmSet a, Arm x);

// The function A ↦ min(f(A), kappa). Flags carry over. Throws
// std::domain_error for negative kappa.
SetFunction threshold_cap(const SetFunction& f, double kappa);

}  // namespace bicrit

#endif  // BICRIT_SET_FUNCTION_H_
