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

#include "bicrit/certificate.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "bicrit/errors.h"

namespace bicrit {
namespace {

constexpr int kCurvatureEnumerationArms = 12;

double need(const std::optional<double>& v, const char* name) {
  if (!v) throw InstanceError(std::string("constants.") + name + ": missing");
  if (!(*v > 0.0) || !std::isfinite(*v)) {
    throw InstanceError(std::string("constants.") + name +
                        ": must be positive and finite");
  }
  return *v;
}

int need(const std::optional<int>& v, const char* name) {
  if (!v) throw InstanceError(std::string("constants.") + name + ": missing");
  if (*v <= 0) {
    throw InstanceError(std::string("constants.") + name +
                        ": must be positive");
  }
  return *v;
}

}  // namespace

ResilienceCert resilience_params(Problem problem,
                                 const InstanceConstants& consts) {
  ResilienceCert cert;
  cert.sense = sense_of(problem);
  switch (problem) {
    case Problem::kSC: {
      const double kappa = need(consts.kappa, "kappa");
      const double omega = need(consts.omega, "omega");
      const int n = need(consts.n, "n");
      const double c_min = need(consts.c_min, "c_min");
      const double c_max = need(consts.c_max, "c_max");
      const double f_max = need(consts.f_max, "f_max");
      cert.alpha = 1.0 + std::log(kappa / omega);
      cert.beta = 1.0 - omega / kappa;
      cert.delta = c_max / (omega * c_min) * f_max * (3.0 + 6.0 * n);
      cert.n_calls = static_cast<std::uint64_t>(n) * n;
      cert.epsilon_cap = omega * c_min / (4.0 * n * c_max);
      break;
    }
    case Problem::kSCSC: {
      const double rho = need(consts.rho, "rho");
      const double psi = need(consts.psi, "psi");
      const double gamma = need(consts.gamma, "gamma");
      const double mu = need(consts.mu, "mu");
      const double c_min = need(consts.c_min, "c_min");
      const double c_max = need(consts.c_max, "c_max");
      const double f_max = need(consts.f_max, "f_max");
      const int n = need(consts.n, "n");
      cert.alpha = rho * (std::log(psi / gamma) + 2.0);
      cert.beta = 1.0;
      cert.delta =
          std::max(8.0 * c_max / (c_min * mu) * cert.alpha * f_max, 1.0);
      cert.n_calls = static_cast<std::uint64_t>(n) * n;
      // From 4·eps·c_max / (mu·c_min) <= 1/2.
      cert.epsilon_cap = mu * c_min / (8.0 * c_max);
      break;
    }
    case Problem::kFSM: {
      const double omega = need(consts.omega, "omega");
      const double kappa = need(consts.kappa, "kappa");
      const int n = need(consts.n, "n");
      cert.alpha = 1.0 - omega;
      cert.beta = 1.0 / omega;
      cert.delta = std::max(4.0 * kappa / (1.0 + omega), 1.0);
      cert.n_calls =
          static_cast<std::uint64_t>(std::llround(n * kappa / omega));
      cert.epsilon_cap = std::numeric_limits<double>::infinity();
      break;
    }
  }
  return cert;
}

ScscConstants scsc_instance_constants(const SetFunction& cost,
                                      const SetFunction& g, double kappa,
                                      std::span<const ArmSet> chain) {
  const int n = cost.n();
  if (n > kCurvatureEnumerationArms) {
    throw CapabilityError("scsc_instance_constants: curvature needs n <= 12, "
                          "got n = " + std::to_string(n));
  }
  if (chain.size() < 2) {
    throw InstanceError("scsc_instance_constants: run has no steps, mu is "
                        "undefined");
  }
  ScscConstants out{};
  std::vector<double> single(n);
  out.c_min = std::numeric_limits<double>::infinity();
  out.c_max = 0.0;
  out.psi = 0.0;
  for (Arm x = 0; x < n; ++x) {
    single[x] = cost.singleton(x);
    out.c_min = std::min(out.c_min, single[x]);
    out.c_max = std::max(out.c_max, single[x]);
    out.psi = std::max(out.psi, g.singleton(x));
  }

  out.rho = 0.0;
  const std::uint32_t count = 1u << n;
  for (std::uint32_t m = 1; m < count; ++m) {
    const ArmSet x_set = ArmSet::from_mask(m);
    double sum = 0.0;
    for (Arm x : x_set.arms()) sum += single[x];
    out.rho = std::max(out.rho, sum / cost.eval(x_set));
  }

  out.gamma = std::numeric_limits<double>::infinity();
  for (ArmSet a : chain) {
    const double g_a = g.eval(a);
    for (Arm x = 0; x < n; ++x) {
      if (a.contains(x)) continue;
      const double gain = std::min(g.eval(a.with(x)) - g_a, kappa);
      if (gain > 0.0) out.gamma = std::min(out.gamma, gain);
    }
  }
  if (!std::isfinite(out.gamma)) {
    throw InstanceError("scsc_instance_constants: no positive marginal along "
                        "the run, gamma is undefined");
  }

  out.mu = std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i < chain.size(); ++i) {
    out.mu = std::min(out.mu, g.eval(chain[i]) - g.eval(chain[i - 1]));
  }
  return out;
}

Certification certify(const Instance& inst, const OfflineSpec& spec) {
  const int n = inst.ground.n();
  spec.validate(n);
  Certification out;
  InstanceConstants& c = out.constants;
  c.n = n;
  switch (spec.problem) {
    case Problem::kSC: {
      if (inst.objective.kind() != SetFunctionKind::kModular) {
        throw ContractError("SC requires a modular objective (cost)");
      }
      const auto costs = inst.objective.costs();
      c.kappa = spec.kappa;
      c.omega = spec.omega;
      c.c_min = *std::min_element(costs.begin(), costs.end());
      c.c_max = *std::max_element(costs.begin(), costs.end());
      c.f_max = inst.objective.range_bound();
      break;
    }
    case Problem::kSCSC: {
      auto oracle = exact_oracle(inst.constraint);
      const GreedyRun dry = scsc_greedy_run(inst.objective, oracle, spec.kappa);
      const ScscConstants k = scsc_instance_constants(
          inst.objective, inst.constraint, spec.kappa, dry.chain);
      c.kappa = spec.kappa;
      c.rho = k.rho;
      c.psi = k.psi;
      c.gamma = k.gamma;
      c.mu = k.mu;
      c.c_min = k.c_min;
      c.c_max = k.c_max;
      c.f_max = inst.objective.range_bound();
      break;
    }
    case Problem::kFSM:
      c.kappa = spec.kappa;
      c.omega = spec.omega;
      break;
  }
  out.cert = resilience_params(spec.problem, c);
  if (spec.problem == Problem::kFSM && out.cert.alpha <= 0.0) {
    out.warnings.push_back("alpha = 0 at omega = 1: the objective bound is "
                           "vacuous");
  }
  return out;
}

nlohmann::json to_json(const ResilienceCert& cert) {
  nlohmann::json j;
  j["alpha"] = cert.alpha;
  j["beta"] = cert.beta;
  j["delta"] = cert.delta;
  j["N"] = cert.n_calls;
  j["sense"] = std::string(to_string(cert.sense));
  if (std::isfinite(cert.epsilon_cap)) {
    j["epsilon_cap"] = cert.epsilon_cap;
  } else {
    j["epsilon_cap"] = "unbounded";
  }
  return j;
}

nlohmann::json to_json(const InstanceConstants& c) {
  nlohmann::json j = nlohmann::json::object();
  auto put = [&](const char* k, const auto& v) {
    if (v) j[k] = *v;
  };
  put("kappa", c.kappa);
  put("omega", c.omega);
  put("n", c.n);
  put("c_min", c.c_min);
  put("c_max", c.c_max);
  put("f_max", c.f_max);
  put("rho", c.rho);
  put("psi", c.psi);
  put("gamma", c.gamma);
  put("mu", c.mu);
  return j;
}

}  // namespace bicrit
