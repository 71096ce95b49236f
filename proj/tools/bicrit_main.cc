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

// bicrit certify|run|sweep --config <path> [--t <T>] [--seed <u64>]
//        [--workers <k>] [--m-override <u64>] [--out <dir>]
//
// Exit status: 0 on success, 1 when a run or some sweep cell failed,
// 2 on usage or config errors (nothing is written in that case).

#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <string_view>

#include "CLI11.hpp"

#include "bicrit/errors.h"
#include "bicrit/experiment.h"

namespace {

std::optional<std::uint64_t> env_seed() {
  const char* raw = std::getenv("BICRIT_SEED");
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  const std::string_view text(raw);
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw bicrit::InstanceError("BICRIT_SEED: expected an unsigned integer");
  }
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Explore-then-exploit bandit runner for resilient bi-criteria "
               "offline algorithms"};
  app.require_subcommand(1);

  std::string config_path;
  std::optional<std::uint64_t> horizon, seed, m_override;
  std::optional<unsigned> workers;
  std::string out_dir;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "experiment config (JSON)")
        ->required();
    sub->add_option("--t", horizon, "horizon T");
    sub->add_option("--seed", seed, "master seed");
    sub->add_option("--workers", workers, "sweep worker threads (0 = auto)");
    sub->add_option("--m-override", m_override,
                    "exploration replications per query");
    sub->add_option("--out", out_dir, "output directory (overrides config)");
  };
  CLI::App* certify = app.add_subcommand("certify", "print the certificate");
  CLI::App* run = app.add_subcommand("run", "one seeded run");
  CLI::App* sweep = app.add_subcommand("sweep", "all horizons x seeds");
  add_common(certify);
  add_common(run);
  add_common(sweep);

  CLI11_PARSE(app, argc, argv);

  bicrit::ExperimentConfig cfg = [&]() -> bicrit::ExperimentConfig {
    try {
      auto c = bicrit::load_config(config_path);
      if (auto s = env_seed()) c.seeds = {*s};
      if (!out_dir.empty()) c.output_dir = out_dir;
      if (m_override) {
        if (*m_override < 1) {
          throw bicrit::InstanceError("--m-override must be >= 1");
        }
        c.m_override = m_override;
      }
      if (workers) c.workers = *workers;
      return c;
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << '\n';
      std::exit(2);
    }
  }();

  try {
    if (certify->parsed()) return bicrit::cmd_certify(cfg, std::cout);
    if (run->parsed()) {
      const std::uint64_t t = horizon.value_or(cfg.horizons.front());
      const std::uint64_t s = seed.value_or(cfg.seeds.front());
      return bicrit::cmd_run(cfg, t, s, std::cout);
    }
    if (horizon) cfg.horizons = {*horizon};
    if (seed) cfg.seeds = {*seed};
    return bicrit::cmd_sweep(cfg, std::cout);
  } catch (const bicrit::InstanceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
