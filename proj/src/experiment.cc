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

#include "bicrit/experiment.h"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "bicrit/errors.h"
#include "bicrit/json_util.h"

namespace bicrit {
namespace {

using nlohmann::json;
namespace fs = std::filesystem;

constexpr double kBoundConstant = 3.0;
constexpr const char* kBoundNote =
    "bound_C3 uses the reference constant C = 3; the regret order carries no "
    "explicit constant";

std::uint64_t require_u64(const json& v, const std::string& field) {
  if (!v.is_number_unsigned() &&
      !(v.is_number_integer() && v.get<long long>() >= 0)) {
    throw InstanceError(field + ": expected a non-negative integer");
  }
  return v.get<std::uint64_t>();
}

SampleDist parse_dist(const json& v, const std::string& field) {
  if (!v.is_string()) throw InstanceError(field + ": expected a string");
  auto d = parse_sample_dist(v.get<std::string>());
  if (!d) {
    throw InstanceError(field + ": unknown distribution '" +
                        v.get<std::string>() + "'");
  }
  return *d;
}

std::vector<int> int_array(const json& v, const std::string& field) {
  if (!v.is_array()) throw InstanceError(field + ": expected an array");
  std::vector<int> out;
  for (const json& e : v) {
    if (!e.is_number_integer()) {
      throw InstanceError(field + ": entries must be integers");
    }
    out.push_back(e.get<int>());
  }
  return out;
}

OfflineSpec parse_offline(const json& j, int n) {
  const std::string field = "offline";
  if (!j.is_object()) throw InstanceError(field + ": expected an object");
  reject_unknown_keys(j, {"problem", "kappa", "omega", "fairness"}, field);
  OfflineSpec spec;
  const std::string problem = require_string(j, "problem", field);
  auto p = parse_problem(problem);
  if (!p) throw InstanceError(field + ".problem: unknown problem '" + problem + "'");
  spec.problem = *p;
  spec.kappa = require_number(j, "kappa", field);
  if (j.contains("omega")) {
    spec.omega = require_number(j, "omega", field);
  } else if (spec.problem != Problem::kSCSC) {
    throw InstanceError(field + ": missing key 'omega'");
  }
  if (j.contains("fairness")) {
    if (spec.problem != Problem::kFSM) {
      throw InstanceError(field + ".fairness: only valid for FSM");
    }
    const json& fj = j["fairness"];
    const std::string ff = field + ".fairness";
    if (!fj.is_object()) throw InstanceError(ff + ": expected an object");
    reject_unknown_keys(fj, {"groups", "lower", "upper"}, ff);
    Fairness fair;
    fair.group_of = int_array(require(fj, "groups", ff), ff + ".groups");
    fair.lower = int_array(require(fj, "lower", ff), ff + ".lower");
    fair.upper = int_array(require(fj, "upper", ff), ff + ".upper");
    spec.fairness = std::move(fair);
  }
  spec.validate(n);
  return spec;
}

std::pair<int, int> line_column(const std::string& text, std::size_t byte) {
  int line = 1, col = 1;
  for (std::size_t i = 0; i < text.size() && i + 1 < byte; ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

void ensure_writable(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) {
    throw InstanceError("output_dir: cannot create '" + dir.string() + "'");
  }
  const fs::path probe = dir / ".bicrit_write_probe";
  {
    std::ofstream out(probe);
    if (!out) {
      throw InstanceError("output_dir: '" + dir.string() + "' is not writable");
    }
  }
  fs::remove(probe, ec);
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << content;
}

std::string cell_stem(std::uint64_t horizon, std::uint64_t seed) {
  return std::to_string(horizon) + "_" + std::to_string(seed);
}

std::string trace_csv(const RunTrace& trace) {
  std::ostringstream os;
  write_trace_csv(os, trace);
  return os.str();
}

double parse_double(std::string_view s) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw std::invalid_argument("bad number '" + std::string(s) + "'");
  }
  return v;
}

std::uint64_t parse_u64(std::string_view s) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw std::invalid_argument("bad integer '" + std::string(s) + "'");
  }
  return v;
}

std::vector<std::string_view> split_commas(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    out.push_back(line.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

struct Stats {
  double mean = 0.0;
  std::optional<double> std_error;
};

Stats stats_of(const std::vector<double>& xs) {
  Stats s;
  if (xs.empty()) return s;
  s.mean = pairwise_sum(xs) / static_cast<double>(xs.size());
  if (xs.size() >= 2) {
    double ss = 0.0;
    for (double x : xs) ss += (x - s.mean) * (x - s.mean);
    const double var = ss / static_cast<double>(xs.size() - 1);
    s.std_error = std::sqrt(var / static_cast<double>(xs.size()));
  }
  return s;
}

json fit_json(const std::vector<std::pair<double, double>>& points) {
  json j;
  try {
    const ScalingFit fit = scaling_exponent(points);
    j["slope"] = fit.slope;
    j["points_used"] = fit.used_points;
    j["warnings"] = fit.warnings;
  } catch (const std::domain_error& e) {
    j["slope"] = nullptr;
    j["error"] = e.what();
  }
  return j;
}

}  // namespace

ExperimentConfig parse_config(const json& config) {
  if (!config.is_object()) throw InstanceError("config: expected an object");
  reject_unknown_keys(config,
                      {"instance", "offline", "horizons", "seeds", "noise",
                       "output_dir", "emit_trace", "m_override", "workers"},
                      "config");
  const json& desc = require(config, "instance", "config");
  Instance inst = build_instance(desc);
  OfflineSpec offline =
      parse_offline(require(config, "offline", "config"), inst.ground.n());

  std::vector<std::uint64_t> horizons;
  const json& hj = require(config, "horizons", "config");
  if (!hj.is_array() || hj.empty()) {
    throw InstanceError("config.horizons: expected a non-empty array");
  }
  for (std::size_t i = 0; i < hj.size(); ++i) {
    const std::string f = "config.horizons[" + std::to_string(i) + "]";
    const std::uint64_t t = require_u64(hj[i], f);
    if (t < 2) throw InstanceError(f + ": T must be >= 2");
    if (!horizons.empty() && t <= horizons.back()) {
      throw InstanceError(f + ": horizons must be strictly increasing");
    }
    horizons.push_back(t);
  }

  std::vector<std::uint64_t> seeds;
  const json& sj = require(config, "seeds", "config");
  if (sj.is_array()) {
    for (std::size_t i = 0; i < sj.size(); ++i) {
      seeds.push_back(
          require_u64(sj[i], "config.seeds[" + std::to_string(i) + "]"));
    }
  } else {
    const std::uint64_t count = require_u64(sj, "config.seeds");
    for (std::uint64_t s = 1; s <= count; ++s) seeds.push_back(s);
  }
  if (seeds.empty()) throw InstanceError("config.seeds: must be non-empty");

  SampleDist f_dist = SampleDist::kBernoulliScaled;
  SampleDist g_dist = SampleDist::kBernoulliScaled;
  if (config.contains("noise")) {
    const json& nj = config["noise"];
    if (nj.is_string()) {
      f_dist = g_dist = parse_dist(nj, "config.noise");
    } else if (nj.is_object()) {
      reject_unknown_keys(nj, {"objective", "constraint"}, "config.noise");
      if (nj.contains("objective")) {
        f_dist = parse_dist(nj["objective"], "config.noise.objective");
      }
      if (nj.contains("constraint")) {
        g_dist = parse_dist(nj["constraint"], "config.noise.constraint");
      }
    } else {
      throw InstanceError("config.noise: expected a string or an object");
    }
  }

  const std::string out_dir = require_string(config, "output_dir", "config");
  if (out_dir.empty()) throw InstanceError("config.output_dir: empty path");

  bool emit_trace = false;
  if (config.contains("emit_trace")) {
    if (!config["emit_trace"].is_boolean()) {
      throw InstanceError("config.emit_trace: expected a boolean");
    }
    emit_trace = config["emit_trace"].get<bool>();
  }
  std::optional<std::uint64_t> m_override;
  if (config.contains("m_override")) {
    m_override = require_u64(config["m_override"], "config.m_override");
    if (*m_override < 1) {
      throw InstanceError("config.m_override: must be >= 1");
    }
  }
  unsigned workers = 0;
  if (config.contains("workers")) {
    workers = static_cast<unsigned>(
        require_u64(config["workers"], "config.workers"));
  }

  return ExperimentConfig{desc,
                          std::move(inst),
                          std::move(offline),
                          std::move(horizons),
                          std::move(seeds),
                          f_dist,
                          g_dist,
                          fs::path(out_dir),
                          emit_trace,
                          m_override,
                          workers};
}

ExperimentConfig load_config(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InstanceError("config: cannot read '" + path.string() + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    const auto [line, col] = line_column(text, e.byte);
    throw InstanceError("config: JSON syntax error at line " +
                        std::to_string(line) + ", column " +
                        std::to_string(col));
  }
  return parse_config(j);
}

Prepared prepare(const ExperimentConfig& cfg) {
  const Instance& inst = cfg.instance;
  Certification certification = certify(inst, cfg.offline);
  OptResult opt =
      cfg.offline.problem == Problem::kFSM
          ? brute_force_opt(inst.objective,
                            FairnessMatroid::strict(cfg.offline,
                                                    inst.ground.n()),
                            static_cast<int>(cfg.offline.kappa))
          : brute_force_opt(inst.objective, inst.constraint, cfg.offline.kappa,
                            Sense::kMinimize, ConstraintDir::kAtLeast);
  opt.instance_id = inst.id;
  return Prepared{std::move(certification), opt};
}

CellOutcome run_cell(const ExperimentConfig& cfg, const Prepared& prep,
                     std::uint64_t horizon, std::uint64_t seed) {
  const Instance& inst = cfg.instance;
  const ResilienceCert& cert = prep.certification.cert;
  RunConfig rc{horizon,
               cert,
               StochasticEnv(inst.objective, inst.constraint, inst.h,
                             cfg.f_dist, cfg.g_dist, seed, horizon),
               cfg.offline,
               cfg.m_override,
               inst.id};
  CellOutcome out{CellSummary{}, run_bicriteria_cmab(rc)};
  const RunTrace& trace = out.trace;
  CellSummary& s = out.summary;
  s.horizon = horizon;
  s.seed = seed;
  s.m = trace.m;
  s.n_queries = trace.queries.size();
  s.explore_rounds = trace.explore_rounds;
  s.exploit_rounds = trace.exploit_rounds();
  s.committed = trace.committed;
  s.committed_is_fallback = trace.committed_is_fallback;
  s.budget_exhausted = trace.budget_exhausted;
  s.report = regret_ccv(trace, prep.opt, cert, cfg.offline.kappa);
  s.rad = confidence_radius(inst.h, horizon, trace.m);
  s.clean_event = clean_event(trace, rc.env, s.rad);
  s.bound_c3 = theoretical_bound(cert, inst.h, horizon, kBoundConstant);
  s.opt_objective = prep.opt.opt_objective;
  s.warnings = trace.warnings;
  return out;
}

json to_json(const CellSummary& s) {
  json j;
  j["T"] = s.horizon;
  j["seed"] = s.seed;
  j["m"] = s.m;
  j["N_queries"] = s.n_queries;
  j["explore_rounds"] = s.explore_rounds;
  j["exploit_rounds"] = s.exploit_rounds;
  j["committed"] = {{"mask_hex", s.committed.to_hex()},
                    {"arms", s.committed.arms()}};
  j["committed_is_fallback"] = s.committed_is_fallback;
  j["budget_exhausted"] = s.budget_exhausted;
  j["sense"] = std::string(to_string(s.report.sense));
  j["alpha"] = s.report.alpha;
  j["beta"] = s.report.beta;
  j["kappa"] = s.report.kappa;
  j["opt_objective"] = s.opt_objective;
  j["regret_f"] = s.report.regret_f;
  j["regret_explore"] = s.report.regret_explore;
  j["regret_exploit"] = s.report.regret_exploit;
  j["ccv_g"] = s.report.ccv_g;
  j["ccv_explore"] = s.report.ccv_explore;
  j["ccv_exploit"] = s.report.ccv_exploit;
  j["clean_event"] = s.clean_event;
  j["rad"] = s.rad;
  j["theoretical_bound"] = s.bound_c3;
  j["theoretical_bound_note"] = kBoundNote;
  j["warnings"] = s.warnings;
  return j;
}

CellSummary cell_summary_from_json(const json& j) {
  CellSummary s;
  s.horizon = j.at("T").get<std::uint64_t>();
  s.seed = j.at("seed").get<std::uint64_t>();
  s.m = j.at("m").get<std::uint64_t>();
  s.n_queries = j.at("N_queries").get<std::uint64_t>();
  s.explore_rounds = j.at("explore_rounds").get<std::uint64_t>();
  s.exploit_rounds = j.at("exploit_rounds").get<std::uint64_t>();
  auto mask = ArmSet::parse_hex(
      j.at("committed").at("mask_hex").get<std::string>());
  if (!mask) throw std::invalid_argument("summary: bad committed mask");
  s.committed = *mask;
  s.committed_is_fallback = j.at("committed_is_fallback").get<bool>();
  s.budget_exhausted = j.at("budget_exhausted").get<bool>();
  s.report.sense = j.at("sense").get<std::string>() == "max"
                       ? Sense::kMaximize
                       : Sense::kMinimize;
  s.report.alpha = j.at("alpha").get<double>();
  s.report.beta = j.at("beta").get<double>();
  s.report.kappa = j.at("kappa").get<double>();
  s.opt_objective = j.at("opt_objective").get<double>();
  s.report.regret_f = j.at("regret_f").get<double>();
  s.report.regret_explore = j.at("regret_explore").get<double>();
  s.report.regret_exploit = j.at("regret_exploit").get<double>();
  s.report.ccv_g = j.at("ccv_g").get<double>();
  s.report.ccv_explore = j.at("ccv_explore").get<double>();
  s.report.ccv_exploit = j.at("ccv_exploit").get<double>();
  s.clean_event = j.at("clean_event").get<bool>();
  s.rad = j.at("rad").get<double>();
  s.bound_c3 = j.at("theoretical_bound").get<double>();
  s.warnings = j.at("warnings").get<std::vector<std::string>>();
  return s;
}

std::string format_double(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, end);
}

void write_trace_csv(std::ostream& out, const RunTrace& trace) {
  out << "t,phase,action_mask_hex,sampled_f,sampled_g\n";
  for (const Round& r : trace.rounds) {
    out << r.t << ',' << (r.phase == Phase::kExplore ? "explore" : "exploit")
        << ',' << r.action.to_hex() << ',' << format_double(r.sampled_f)
        << ',' << format_double(r.sampled_g) << '\n';
  }
}

std::vector<Round> read_trace_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) ||
      line != "t,phase,action_mask_hex,sampled_f,sampled_g") {
    throw std::invalid_argument("trace csv: bad header");
  }
  std::vector<Round> rounds;
  while (std::getline(in, line)) {
    const auto cells = split_commas(line);
    if (cells.size() != 5) throw std::invalid_argument("trace csv: bad row");
    Round r;
    r.t = parse_u64(cells[0]);
    if (cells[1] == "explore") {
      r.phase = Phase::kExplore;
    } else if (cells[1] == "exploit") {
      r.phase = Phase::kExploit;
    } else {
      throw std::invalid_argument("trace csv: bad phase");
    }
    auto mask = ArmSet::parse_hex(cells[2]);
    if (!mask) throw std::invalid_argument("trace csv: bad mask");
    r.action = *mask;
    r.sampled_f = parse_double(cells[3]);
    r.sampled_g = parse_double(cells[4]);
    rounds.push_back(r);
  }
  return rounds;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << "T,seed,m,regret_f,ccv_g,bound_C3\n";
  for (const SweepRow& r : rows) {
    out << r.horizon << ',' << r.seed << ',' << r.m << ','
        << format_double(r.regret_f) << ',' << format_double(r.ccv_g) << ','
        << format_double(r.bound_c3) << '\n';
  }
}

std::vector<SweepRow> read_sweep_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != "T,seed,m,regret_f,ccv_g,bound_C3") {
    throw std::invalid_argument("sweep csv: bad header");
  }
  std::vector<SweepRow> rows;
  while (std::getline(in, line)) {
    const auto c = split_commas(line);
    if (c.size() != 6) throw std::invalid_argument("sweep csv: bad row");
    rows.push_back({parse_u64(c[0]), parse_u64(c[1]), parse_u64(c[2]),
                    parse_double(c[3]), parse_double(c[4]),
                    parse_double(c[5])});
  }
  return rows;
}

int cmd_certify(const ExperimentConfig& cfg, std::ostream& log) {
  const Certification c = certify(cfg.instance, cfg.offline);
  ensure_writable(cfg.output_dir);
  json report;
  report["problem"] = std::string(to_string(cfg.offline.problem));
  report["certificate"] = to_json(c.cert);
  report["constants"] = to_json(c.constants);
  report["warnings"] = c.warnings;
  const std::string text = report.dump(2) + "\n";
  write_file(cfg.output_dir / "certificate.json", text);
  for (const auto& w : c.warnings) log << "warning: " << w << '\n';
  log << text;
  return 0;
}

int cmd_run(const ExperimentConfig& cfg, std::uint64_t horizon,
            std::uint64_t seed, std::ostream& log) {
  if (horizon < 2) {
    log << "error: T must be >= 2\n";
    return 2;
  }
  Prepared prep;
  CellOutcome cell;
  try {
    prep = prepare(cfg);
    cell = run_cell(cfg, prep, horizon, seed);
  } catch (const InfeasibleError& e) {
    log << "error: " << e.what() << '\n';
    return 1;
  }
  ensure_writable(cfg.output_dir);
  const std::string stem = cell_stem(horizon, seed);
  if (cfg.emit_trace) {
    write_file(cfg.output_dir / ("trace_" + stem + ".csv"),
               trace_csv(cell.trace));
  }
  write_file(cfg.output_dir / ("summary_" + stem + ".json"),
             to_json(cell.summary).dump(2) + "\n");
  for (const auto& w : cell.summary.warnings) log << "warning: " << w << '\n';
  log << "T=" << horizon << " seed=" << seed << " m=" << cell.summary.m
      << " regret_f=" << format_double(cell.summary.report.regret_f)
      << " ccv_g=" << format_double(cell.summary.report.ccv_g) << '\n';
  return 0;
}

int cmd_sweep(const ExperimentConfig& cfg, std::ostream& log) {
  std::vector<std::string> warnings;
  if (cfg.seeds.size() < 10) {
    warnings.push_back("fewer than 10 seeds (" +
                       std::to_string(cfg.seeds.size()) +
                       "); per-T means will be noisy");
  }
  if (cfg.horizons.size() < 4) {
    warnings.push_back("fewer than 4 horizons; scaling exponents need at "
                       "least 4");
  }
  for (const auto& w : warnings) log << "warning: " << w << '\n';

  const Prepared prep = prepare(cfg);
  ensure_writable(cfg.output_dir);

  struct Cell {
    std::uint64_t horizon, seed;
    std::optional<CellSummary> summary;
    std::string error;
  };
  std::vector<Cell> cells;
  for (std::uint64_t t : cfg.horizons) {
    for (std::uint64_t s : cfg.seeds) cells.push_back({t, s, std::nullopt, {}});
  }

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++) {
      Cell& c = cells[i];
      try {
        CellOutcome out = run_cell(cfg, prep, c.horizon, c.seed);
        const std::string stem = cell_stem(c.horizon, c.seed);
        if (cfg.emit_trace) {
          write_file(cfg.output_dir / ("trace_" + stem + ".csv"),
                     trace_csv(out.trace));
        }
        write_file(cfg.output_dir / ("summary_" + stem + ".json"),
                   to_json(out.summary).dump(2) + "\n");
        c.summary = std::move(out.summary);
      } catch (const std::exception& e) {
        c.error = e.what();
      }
    }
  };
  unsigned workers =
      cfg.workers ? cfg.workers
                  : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, cells.size()));
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
  }

  std::vector<SweepRow> rows;
  json failures = json::array();
  json per_t = json::array();
  std::vector<std::pair<double, double>> regret_points, ccv_points;
  for (std::uint64_t t : cfg.horizons) {
    std::vector<double> regrets, ccvs, ratios_r, ratios_c;
    double bound = 0.0;
    for (const Cell& c : cells) {
      if (c.horizon != t) continue;
      if (!c.summary) {
        failures.push_back({{"T", c.horizon}, {"seed", c.seed},
                            {"reason", c.error}});
        continue;
      }
      const CellSummary& s = *c.summary;
      rows.push_back({s.horizon, s.seed, s.m, s.report.regret_f,
                      s.report.ccv_g, s.bound_c3});
      regrets.push_back(s.report.regret_f);
      ccvs.push_back(s.report.ccv_g);
      ratios_r.push_back(s.report.regret_f / s.bound_c3);
      ratios_c.push_back(s.report.ccv_g / s.bound_c3);
      bound = s.bound_c3;
    }
    json row;
    row["T"] = t;
    row["cells_ok"] = regrets.size();
    if (!regrets.empty()) {
      const Stats r = stats_of(regrets), c = stats_of(ccvs);
      row["mean_regret_f"] = r.mean;
      row["std_error_regret_f"] = r.std_error ? json(*r.std_error) : json(nullptr);
      row["mean_ccv_g"] = c.mean;
      row["std_error_ccv_g"] = c.std_error ? json(*c.std_error) : json(nullptr);
      row["bound_C3"] = bound;
      row["mean_bound_ratio_regret"] = stats_of(ratios_r).mean;
      row["mean_bound_ratio_ccv"] = stats_of(ratios_c).mean;
      regret_points.emplace_back(static_cast<double>(t), r.mean);
      ccv_points.emplace_back(static_cast<double>(t), c.mean);
    }
    per_t.push_back(row);
  }

  std::ostringstream csv;
  write_sweep_csv(csv, rows);
  write_file(cfg.output_dir / "sweep.csv", csv.str());

  json summary;
  summary["problem"] = std::string(to_string(cfg.offline.problem));
  summary["certificate"] = to_json(prep.certification.cert);
  summary["opt_objective"] = prep.opt.opt_objective;
  summary["per_T"] = per_t;
  summary["exponents"] = {{"regret_f", fit_json(regret_points)},
                          {"ccv_g", fit_json(ccv_points)}};
  summary["failures"] = failures;
  summary["warnings"] = warnings;
  summary["bound_note"] = kBoundNote;
  write_file(cfg.output_dir / "sweep_summary.json", summary.dump(2) + "\n");

  for (const auto& f : failures) {
    log << "cell T=" << f["T"] << " seed=" << f["seed"]
        << " failed: " << f["reason"].get<std::string>() << '\n';
  }
  log << "sweep: " << rows.size() << " of " << cells.size()
      << " cells succeeded\n";
  return failures.empty() ? 0 : 1;
}

}  // namespace bicrit
