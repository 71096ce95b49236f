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

#ifndef BICRIT_RNG_H_
#define BICRIT_RNG_H_

#include <cstdint>
#include <random>
#include <string_view>

namespace bicrit {

// Seed splitting scheme. A child stream is identified by the master seed, a
// horizon (0 when not applicable) and a stream name:
//
//   child = splitmix64(splitmix64(splitmix64(master) ^ horizon) ^ fnv1a(name))
//
// so adding a horizon or a stream name never changes any other stream.
std::uint64_t splitmix64(std::uint64_t x);
std::uint64_t fnv1a(std::string_view text);
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t horizon,
                          std::string_view stream_name);

// A named deterministic random stream. mt19937_64 output is fixed by the
// standard; the uniform is built from the top 53 bits so results do not depend
// on the standard library's distribution implementations.
class RandomStream {
 public:
  RandomStream() : RandomStream(0) {}
  explicit RandomStream(std::uint64_t seed) : engine_(seed) {}
  RandomStream(std::uint64_t master, std::uint64_t horizon,
               std::string_view name)
      : engine_(derive_seed(master, horizon, name)) {}

  // Uniform in [0, 1).
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }
  bool bernoulli(double p) { return uniform() < p; }
  std::uint64_t next() { return engine_(); }
  // Uniform integer in [0, bound). Rejection sampling, bound > 0.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::mt19937_64 engine_;
};

}  // namespace bicrit

#endif  // BICRIT_RNG_H_
