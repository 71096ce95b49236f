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

// Small schema helpers shared by the instance and experiment loaders.

#ifndef BICRIT_JSON_UTIL_H_
#define BICRIT_JSON_UTIL_H_

#include <algorithm>
#include <initializer_list>
#include <string>
#include <string_view>

#include "json.hpp"

#include "bicrit/errors.h"

namespace bicrit {

inline void reject_unknown_keys(const nlohmann::json& obj,
                                std::initializer_list<std::string_view> allowed,
                                const std::string& field) {
  for (const auto& [key, value] : obj.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      throw InstanceError(field + ": unknown key '" + key + "'");
    }
  }
}

inline const nlohmann::json& require(const nlohmann::json& obj,
                                     const char* key,
                                     const std::string& field) {
  auto it = obj.find(key);
  if (it == obj.end()) {
    throw InstanceError(field + ": missing key '" + key + "'");
  }
  return *it;
}

inline std::string require_string(const nlohmann::json& obj, const char* key,
                                  const std::string& field) {
  const auto& v = require(obj, key, field);
  if (!v.is_string()) {
    throw InstanceError(field + "." + key + ": expected a string");
  }
  return v.get<std::string>();
}

inline double require_number(const nlohmann::json& obj, const char* key,
                             const std::string& field) {
  const auto& v = require(obj, key, field);
  if (!v.is_number()) {
    throw InstanceError(field + "." + key + ": expected a number");
  }
  return v.get<double>();
}

}  // namespace bicrit

#endif  // BICRIT_JSON_UTIL_H_
