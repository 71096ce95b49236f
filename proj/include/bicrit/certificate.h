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

#ifndef BICRIT_CERTIFICATE_H_
#define BICRIT_CERTIFICATE_H_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "json.hpp"

#include "bicrit/arm_set.h"
#include "bicrit/instance.h"
#include "bicrit/offline.h"
#include "bicrit/set_function.h"

namespace bicrit {

// (alpha, beta, delta, N)-resilience certificate of an offline algorithm.
//
// With oracles off by less than epsilon (epsilon <= epsilon_cap):
//   max sense: f(S) >= alpha·f(OPT) − delta·eps,  g(S) <= beta·kappa + delta·eps
//   min sense: f(S) <= alpha·f(OPT) + delta·eps,  g(S) >= beta·kappa − delta·eps
// using at most n_calls distinct oracle queries.
struct ResilienceCert {
  double alpha = 0.0;
  double beta = 0.0;
  double delta = 0.0;
  std::uint64_t n_calls = 0;
  Sense sense = Sense::kMaximize;
  double epsilon_cap = 0.0;  // +inf when the guarantee has no epsilon bound
};

// Symbols the certificate formulas draw on. Each problem reads a subset:
//   SC:   kappa, omega, n, c_min, c_max, f_max
//   SCSC: rho, psi, gamma, mu, c_min, c_max, f_max, n
//   FSM:  omega, kappa, n
struct InstanceConstants {
  std::optional<double> kappa, omega;
  std::optional<int> n;
  std::optional<double> c_min, c_max, f_max;
  std::optional<double> rho, psi, gamma, mu;
};

// Throws InstanceError naming the first missing or non-positive constant.
ResilienceCert resilience_params(Problem problem,
                                 const InstanceConstants& consts);

struct ScscConstants {
  double rho, psi, gamma, mu, c_min, c_max;
};

// Curvature rho by enumeration over non-empty X, psi = max g({x}), gamma and
// mu from the greedy prefix chain A_0 ⊂ A_1 ⊂ ... (see offline.h).
// Throws CapabilityError for n > 12 and InstanceError for a chain without
// steps (mu undefined) or without a positive marginal (gamma undefined).
ScscConstants scsc_instance_constants(const SetFunction& cost,
                                      const SetFunction& g, double kappa,
                                      std::span<const ArmSet> chain);

// Constants and certificate for an instance, including the dry exact-oracle
// greedy run that SCSC needs.
struct Certification {
  InstanceConstants constants;
  ResilienceCert cert;
  std::vector<std::string> warnings;
};

Certification certify(const Instance& inst, const OfflineSpec& spec);

nlohmann::json to_json(const ResilienceCert& cert);
nlohmann::json to_json(const InstanceConstants& consts);

}  // namespace bicrit

#endif  // BICRIT_CERTIFICATE_H_
