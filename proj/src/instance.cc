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

#include "bicrit/instance.h"

#include <algorithm>
#include <initializer_list>
#include <string>
#include <vector>

#include "bicrit/errors.h"
#include "bicrit/json_util.h"
#include "bicrit/rng.h"

namespace bicrit {
namespace {

using nlohmann::json;

std::vector<std::vector<int>> read_covers(const json& payload, int n,
                                          const std::string& field) {
  const json& covers = require(payload, "covers", field);
  if (!covers.is_array() || static_cast<int>(covers.size()) != n) {
    throw InstanceError(field + ".covers: expected an array of " +
                        std::to_string(n) + " element lists");
  }
  std::vector<std::vector<int>> out;
  for (std::size_t x = 0; x < covers.size(); ++x) {
    const std::string f = field + ".covers[" + std::to_string(x) + "]";
    if (!covers[x].is_array()) throw InstanceError(f + ": expected an array");
    std::vector<int> elems;
    for (const json& e : covers[x]) {
      if (!e.is_number_integer()) {
        throw InstanceError(f + ": element indices must be integers");
      }
      elems.push_back(e.get<int>());
    }
    out.push_back(std::move(elems));
  }
  return out;
}

std::vector<double> read_numbers(const json& payload, const char* key,
                                 const std::string& field) {
  const json& arr = require(payload, key, field);
  if (!arr.is_array()) {
    throw InstanceError(field + "." + key + ": expected an array");
  }
  std::vector<double> out;
  for (const json& v : arr) {
    if (!v.is_number()) {
      throw InstanceError(field + "." + key + ": entries must be numbers");
    }
    out.push_back(v.get<double>());
  }
  return out;
}

// Prefix builder errors ("covers[2]: ...") with the field path.
template <typename F>
SetFunction with_context(const std::string& field, F&& make) {
  try {
    return make();
  } catch (const InstanceError& e) {
    throw InstanceError(field + "." + e.what());
  }
}

}  // namespace

SetFunction build_function(const json& description, int n,
                           const std::string& field) {
  if (!description.is_object()) {
    throw InstanceError(field + ": expected an object");
  }
  reject_unknown_keys(description, {"kind", "payload"}, field);
  const std::string kind = require_string(description, "kind", field);
  const json& payload = require(description, "payload", field);
  const std::string pfield = field + ".payload";
  if (!payload.is_object()) throw InstanceError(pfield + ": expected an object");

  if (kind == "coverage") {
    reject_unknown_keys(payload, {"universe", "covers"}, pfield);
    const json& u = require(payload, "universe", pfield);
    if (!u.is_number_integer()) {
      throw InstanceError(pfield + ".universe: expected an integer");
    }
    if (u.get<long long>() < 1) {
      throw InstanceError(pfield + ".universe: empty universe");
    }
    auto covers = read_covers(payload, n, pfield);
    return with_context(pfield, [&] {
      return SetFunction::coverage(u.get<int>(), covers);
    });
  }
  if (kind == "weighted-coverage") {
    reject_unknown_keys(payload, {"weights", "covers"}, pfield);
    auto weights = read_numbers(payload, "weights", pfield);
    auto covers = read_covers(payload, n, pfield);
    return with_context(pfield, [&] {
      return SetFunction::weighted_coverage(std::move(weights), covers);
    });
  }
  if (kind == "modular") {
    reject_unknown_keys(payload, {"costs"}, pfield);
    auto costs = read_numbers(payload, "costs", pfield);
    if (static_cast<int>(costs.size()) != n) {
      throw InstanceError(pfield + ".costs: expected " + std::to_string(n) +
                          " entries, got " + std::to_string(costs.size()));
    }
    return with_context(pfield,
                        [&] { return SetFunction::modular(std::move(costs)); });
  }
  throw InstanceError(field + ".kind: unknown function kind '" + kind + "'");
}

Instance build_instance(const json& description) {
  if (!description.is_object()) {
    throw InstanceError("instance: expected an object");
  }
  reject_unknown_keys(description, {"ground", "objective", "constraint", "h"},
                      "instance");
  const json& ground = require(description, "ground", "instance");
  if (!ground.is_object()) {
    throw InstanceError("instance.ground: expected an object");
  }
  reject_unknown_keys(ground, {"n", "labels"}, "instance.ground");
  const json& nj = require(ground, "n", "instance.ground");
  if (!nj.is_number_integer()) {
    throw InstanceError("instance.ground.n: expected an integer");
  }
  std::vector<std::string> labels;
  if (ground.contains("labels")) {
    if (!ground["labels"].is_array()) {
      throw InstanceError("instance.ground.labels: expected an array");
    }
    for (const json& l : ground["labels"]) {
      if (!l.is_string()) {
        throw InstanceError("instance.ground.labels: entries must be strings");
      }
      labels.push_back(l.get<std::string>());
    }
  }
  const long long n_raw = nj.get<long long>();
  if (n_raw < 1 || n_raw > kMaxArms) {
    throw InstanceError("instance.ground.n: " + std::to_string(n_raw) +
                        " outside [1, 30]");
  }
  GroundSet gs = [&] {
    try {
      return GroundSet(static_cast<int>(n_raw), std::move(labels));
    } catch (const InstanceError& e) {
      throw InstanceError(std::string("instance.ground.") + e.what());
    }
  }();
  const int n = gs.n();
  SetFunction f = build_function(require(description, "objective", "instance"),
                                 n, "instance.objective");
  SetFunction g = build_function(
      require(description, "constraint", "instance"), n, "instance.constraint");
  double h = std::max(f.range_bound(), g.range_bound());
  if (description.contains("h")) {
    const json& hj = description["h"];
    if (!hj.is_number() || !(hj.get<double>() > 0.0)) {
      throw InstanceError("instance.h: expected a positive number");
    }
    h = hj.get<double>();
    if (h < std::max(f.range_bound(), g.range_bound())) {
      throw InstanceError(
          "instance.h: smaller than the functions' range bounds");
    }
  }
  return Instance{std::move(gs), std::move(f), std::move(g), h,
                  fnv1a(description.dump())};
}

}  // namespace bicrit
