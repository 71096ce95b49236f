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

#ifndef BICRIT_ARM_SET_H_
#define BICRIT_ARM_SET_H_

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bicrit {

inline constexpr int kMaxArms = 30;

// Base arms are addressed by index in [0, n).
using Arm = int;

// An immutable subset of the ground set, stored as a bit mask. Only the low n
// bits may be set for a ground set of n arms; that is checked where the set
// meets a function (SetFunction::eval), not here.
class ArmSet {
 public:
  constexpr ArmSet() = default;

  static ArmSet from_mask(std::uint32_t mask);
  static ArmSet of(std::initializer_list<Arm> arms);
  static ArmSet of(const std::vector<Arm>& arms);
  static ArmSet full(int n);

  constexpr std::uint32_t mask() const { return mask_; }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr int size() const { return std::popcount(mask_); }
  bool contains(Arm x) const;
  ArmSet with(Arm x) const;
  ArmSet without(Arm x) const;
  constexpr bool is_subset_of(ArmSet other) const {
    return (mask_ & ~other.mask_) == 0;
  }
  constexpr ArmSet operator|(ArmSet other) const {
    return ArmSet(mask_ | other.mask_);
  }
  constexpr ArmSet operator&(ArmSet other) const {
    return ArmSet(mask_ & other.mask_);
  }

  // Member indices in increasing order.
  std::vector<Arm> arms() const;

  // Lower-case hex without prefix, e.g. "0", "3", "1f".
  std::string to_hex() const;
  static std::optional<ArmSet> parse_hex(std::string_view text);

  friend constexpr bool operator==(ArmSet, ArmSet) = default;
  friend constexpr auto operator<=>(ArmSet a, ArmSet b) {
    return a.mask_ <=> b.mask_;
  }

 private:
  constexpr explicit ArmSet(std::uint32_t mask) : mask_(mask) {}

  std::uint32_t mask_ = 0;
};

}  // namespace bicrit

template <>
struct std::hash<bicrit::ArmSet> {
  std::size_t operator()(bicrit::ArmSet s) const noexcept {
    return std::hash<std::uint32_t>{}(s.mask());
  }
};

#endif  // BICRIT_ARM_SET_H_
