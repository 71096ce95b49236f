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

#include "bicrit/arm_set.h"

#include <charconv>
#include <stdexcept>

namespace bicrit {
namespace {

void check_arm(Arm x) {
  if (x < 0 || x >= kMaxArms) {
    throw std::out_of_range("arm index " + std::to_string(x) +
                            " outside [0, " + std::to_string(kMaxArms) + ")");
  }
}

}  // namespace

ArmSet ArmSet::from_mask(std::uint32_t mask) {
  if (mask >> kMaxArms) {
    throw std::out_of_range("arm mask uses bits above the 30-arm cap");
  }
  return ArmSet(mask);
}

ArmSet ArmSet::of(std::initializer_list<Arm> arms) {
  std::uint32_t mask = 0;
  for (Arm x : arms) {
    check_arm(x);
    mask |= 1u << x;
  }
  return ArmSet(mask);
}

ArmSet ArmSet::of(const std::vector<Arm>& arms) {
  std::uint32_t mask = 0;
  for (Arm x : arms) {
    check_arm(x);
    mask |= 1u << x;
  }
  return ArmSet(mask);
}

ArmSet ArmSet::full(int n) {
  if (n < 0 || n > kMaxArms) {
    throw std::out_of_range("ground set size " + std::to_string(n) +
                            " outside [0, 30]");
  }
  return ArmSet((1u << n) - 1u);
}

bool ArmSet::contains(Arm x) const {
  check_arm(x);
  return (mask_ >> x) & 1u;
}

ArmSet ArmSet::with(Arm x) const {
  check_arm(x);
  return ArmSet(mask_ | (1u << x));
}

ArmSet ArmSet::without(Arm x) const {
  check_arm(x);
  return ArmSet(mask_ & ~(1u << x));
}

std::vector<Arm> ArmSet::arms() const {
  std::vector<Arm> out;
  out.reserve(size());
  for (std::uint32_t m = mask_; m != 0; m &= m - 1) {
    out.push_back(std::countr_zero(m));
  }
  return out;
}

std::string ArmSet::to_hex() const {
  char buf[16];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), mask_, 16);
  return std::string(buf, end);
}

std::optional<ArmSet> ArmSet::parse_hex(std::string_view text) {
  if (text.starts_with("0x") || text.starts_with("0X")) text.remove_prefix(2);
  std::uint32_t mask = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(),
                                   mask, 16);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty() ||
      (mask >> kMaxArms) != 0) {
    return std::nullopt;
  }
  return ArmSet(mask);
}

}  // namespace bicrit
