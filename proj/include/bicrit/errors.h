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

#ifndef BICRIT_ERRORS_H_
#define BICRIT_ERRORS_H_

#include <stdexcept>
#include <string>

namespace bicrit {

// Malformed input: bad payloads, out-of-domain parameters, schema violations.
// Range and domain failures use std::out_of_range / std::domain_error.
class InstanceError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The constraint cannot be met (offline pre-checks, brute force with no
// feasible set).
class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A caller handed an operation something outside its contract, e.g. a
// non-modular cost to MINTSS or traces from two different instances.
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Request exceeds what exhaustive machinery is allowed to enumerate.
class CapabilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Something that a lemma guarantees did not happen. Always a bug.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace bicrit

#endif  // BICRIT_ERRORS_H_
