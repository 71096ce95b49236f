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

#ifndef BICRIT_INSTANCE_H_
#define BICRIT_INSTANCE_H_

#include <cstdint>

#include "json.hpp"

#include "bicrit/set_function.h"

namespace bicrit {

// A validated problem instance: ground set, objective f, constraint g and the
// shared feedback range h.
struct Instance {
  GroundSet ground;
  SetFunction objective;
  SetFunction constraint;
  double h;
  // FNV-1a of the canonical JSON description; ties traces and optima to the
  // instance they were computed on.
  std::uint64_t id;
};

// Instance description schema (JSON):
//
//   {
//     "ground":     {"n": <int 1..30>, "labels": [<string>...]?},
//     "objective":  <function>,
//     "constraint": <function>,
//     "h":          <number>?      // default max(f range, g range)
//   }
//
//   <function> := {"kind": "coverage",
//                  "payload": {"universe": <int>, "covers": [[<int>...]...]}}
//               | {"kind": "weighted-coverage",
//                  "payload": {"weights": [<num>...], "covers": [[<int>...]...]}}
//               | {"kind": "modular", "payload": {"costs": [<num>...]}}
//
// covers[x] lists the element indices arm x covers; covers and costs have
// exactly n entries. Unknown keys anywhere are rejected. Errors are
// InstanceError with the offending field path in the message.
Instance build_instance(const nlohmann::json& description);

// One function description, `field` prefixes error messages.
SetFunction build_function(const nlohmann::json& description, int n,
                           const std::string& field);

}  // namespace bicrit

#endif  // BICRIT_INSTANCE_H_
