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

// Reproducible experiment runner behind the `bicrit` command line tool.
//
// Config file (JSON, unknown keys rejected):
//
//   {
//     "instance":   <instance description, see instance.h>,
//     "offline":    {"problem": "SC" | "SCSC" | "FSM",
//                    "kappa": <num>, "omega": <num>,
//                    "fairness": {"groups": [<int> per arm],
//                                 "lower": [<int> per group],
//                                 "upper": [<int> per group]}},   // FSM only
//     "horizons":   [<T>...],            // strictly increasing, T >= 2
//     "seeds":      [<u64>...] | <count>, // a count c means seeds 1..c
//     "noise":      "bernoulli-scaled" | "point-mass"
//                   | {"objective": <dist>, "constraint": <dist>},
//     "output_dir": <path>,
//     "emit_trace": <bool>,               // default false
//     "m_override": <u64>?,
//     "workers":    <int>?                // sweep pool size, 0 = auto
//   }
//
// Every (T, seed) cell draws from child streams derived from the seed value
// (the master seed), T and a stream name; see rng.h.

#ifndef BICRIT_EXPERIMENT_H_
#define BICRIT_EXPERIMENT_H_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "bicrit/certificate.h"
#include "bicrit/eval.h"
#include "bicrit/instance.h"
#include "bicrit/offline.h"
#include "bicrit/online.h"

namespace bicrit {

struct ExperimentConfig {
  nlohmann::json instance_description;
  Instance instance;
  OfflineSpec offline;
  std::vector<std::uint64_t> horizons;
  std::vector<std::uint64_t> seeds;
  SampleDist f_dist = SampleDist::kBernoulliScaled;
  SampleDist g_dist = SampleDist::kBernoulliScaled;
  std::filesystem::path output_dir;
  bool emit_trace = false;
  std::optional<std::uint64_t> m_override;
  unsigned workers = 0;
};

// Throws InstanceError with a field path (or line/column for JSON syntax
// errors) on any schema violation.
ExperimentConfig parse_config(const nlohmann::json& config);
ExperimentConfig load_config(const std::filesystem::path& path);

// Per-experiment quantities shared by all cells.
struct Prepared {
  Certification certification;
  OptResult opt;
};

Prepared prepare(const ExperimentConfig& cfg);

struct CellSummary {
  std::uint64_t horizon = 0;
  std::uint64_t seed = 0;
  std::uint64_t m = 0;
  std::uint64_t n_queries = 0;
  std::uint64_t explore_rounds = 0;
  std::uint64_t exploit_rounds = 0;
  ArmSet committed;
  bool committed_is_fallback = false;
  bool budget_exhausted = false;
  RegretReport report;
  bool clean_event = false;
  double rad = 0.0;
  double bound_c3 = 0.0;
  double opt_objective = 0.0;
  std::vector<std::string> warnings;
};

nlohmann::json to_json(const CellSummary& s);
CellSummary cell_summary_from_json(const nlohmann::json& j);

struct CellOutcome {
  CellSummary summary;
  RunTrace trace;
};

// One online run for (T, seed); offline infeasibility propagates.
CellOutcome run_cell(const ExperimentConfig& cfg, const Prepared& prep,
                     std::uint64_t horizon, std::uint64_t seed);

// Shortest decimal that parses back to the same double.
std::string format_double(double v);

// trace CSV: t,phase,action_mask_hex,sampled_f,sampled_g
void write_trace_csv(std::ostream& out, const RunTrace& trace);
std::vector<Round> read_trace_csv(std::istream& in);

struct SweepRow {
  std::uint64_t horizon;
  std::uint64_t seed;
  std::uint64_t m;
  double regret_f;
  double ccv_g;
  double bound_c3;
};

// sweep CSV: T,seed,m,regret_f,ccv_g,bound_C3
void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);
std::vector<SweepRow> read_sweep_csv(std::istream& in);

// Commands. Each returns the process exit status and writes only inside
// cfg.output_dir; `log` receives human-readable progress and warnings.
int cmd_certify(const ExperimentConfig& cfg, std::ostream& log);
int cmd_run(const ExperimentConfig& cfg, std::uint64_t horizon,
            std::uint64_t seed, std::ostream& log);
int cmd_sweep(const ExperimentConfig& cfg, std::ostream& log);

}  // namespace bicrit

#endif  // BICRIT_EXPERIMENT_H_
