// Copyright 2026 The icmac Authors
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


#include "icmac/cli.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <optional>
#include <tuple>
#include <vector>

#include "CLI11.hpp"
#include "icmac/baseline.h"
#include "icmac/csv.h"
#include "icmac/epi.h"
#include "icmac/minpic.h"
#include "icmac/random_scenario.h"
#include "icmac/region.h"
#include "icmac/scenario_io.h"
#include "icmac/timeshare.h"

namespace icmac {

namespace {

struct Flags {
  std::string scenario;
  std::string out;
  double tol = 1e-9;
  std::uint64_t seed = 0;
  int grid = 64;
};

struct MethodRow {
  std::string method;
  bool feasible = false;
  double total_power = 0.0;
  std::vector<double> rates;
  std::int64_t configs_evaluated = 0;
};

class Infeasible : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double Seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

FixedPointOptions FixedPoint(const Flags& flags) {
  FixedPointOptions options;
  options.tolerance = flags.tol;
  return options;
}

// Report schema: method, feasibility, total power, per-user rates (and bits
// per second when the bandwidth is known), configurations evaluated.
// Infeasible methods leave the numeric cells empty.
CsvTable ReportTable(const Scenario& sc, const std::vector<MethodRow>& rows) {
  const int n = sc.num_users();
  CsvTable table;
  table.header = {"method", "feasible", "total_power"};
  for (int k = 1; k <= n; ++k) table.header.push_back("rate_" + std::to_string(k) + "_bits");
  if (sc.bandwidth_hz) {
    for (int k = 1; k <= n; ++k) table.header.push_back("rate_" + std::to_string(k) + "_bps");
  }
  table.header.push_back("configs_evaluated");
  for (const MethodRow& r : rows) {
    std::vector<std::string> cells = {r.method, r.feasible ? "1" : "0"};
    cells.push_back(r.feasible ? format_number(r.total_power) : "");
    for (int k = 0; k < n; ++k) {
      cells.push_back(r.feasible ? format_number(r.rates[static_cast<std::size_t>(k)]) : "");
    }
    if (sc.bandwidth_hz) {
      for (int k = 0; k < n; ++k) {
        cells.push_back(r.feasible ? format_number(to_bits_per_second(
                                         r.rates[static_cast<std::size_t>(k)],
                                         *sc.bandwidth_hz))
                                   : "");
      }
    }
    cells.push_back(std::to_string(r.configs_evaluated));
    table.AddRow(std::move(cells));
  }
  return table;
}

bool WithinBudget(const Scenario& sc, double power) {
  return !sc.power_budget || power <= *sc.power_budget;
}

MethodRow FromSolution(const std::string& method, const Solution& sol) {
  MethodRow row;
  row.method = method;
  row.feasible = sol.feasible;
  row.total_power = sol.total_power;
  row.rates = user_rates(sol.rates);
  row.configs_evaluated = sol.configs_evaluated;
  return row;
}

MethodRow RunMinpic(const Scenario& sc, const Flags& flags, Solution* out) {
  MinPicSettings settings;
  settings.fixed_point = FixedPoint(flags);
  Solution sol = minpic_solve(sc, settings);
  if (out != nullptr) *out = sol;
  return FromSolution("minpic", sol);
}

MethodRow RunBrute(const Scenario& sc, const Flags& flags) {
  BruteForceSettings settings;
  settings.fixed_point = FixedPoint(flags);
  return FromSolution("brute", brute_force_solve(sc, settings));
}

struct TimeShareRun {
  std::vector<VertexPoint> vertices;
  std::optional<TimeShareSchedule> schedule;
};

TimeShareRun RunTimeShare(const Scenario& sc, const Flags& flags,
                          const Solution& sol) {
  TimeShareRun run;
  if (!sol.feasible) return run;
  const int n = sc.num_users();
  run.vertices = build_vertices(sc, neighbourhood_configs(sol.config, n),
                                default_rate_targets(sc.rate_min),
                                FixedPoint(flags));
  run.vertices.push_back(vertex_from_solution(sol));
  run.schedule = solve_timeshare_lp(run.vertices, sc.rate_min);
  return run;
}

MethodRow TimeShareRow(const Scenario& sc, const TimeShareRun& run) {
  MethodRow row;
  row.method = "timeshare";
  std::vector<std::uint64_t> ids;
  for (const VertexPoint& v : run.vertices) ids.push_back(v.config_id);
  std::sort(ids.begin(), ids.end());
  row.configs_evaluated = std::unique(ids.begin(), ids.end()) - ids.begin();
  if (run.schedule && WithinBudget(sc, run.schedule->avg_power)) {
    row.feasible = true;
    row.total_power = run.schedule->avg_power;
    row.rates = run.schedule->avg_rates;
  }
  return row;
}

MethodRow RunOma(const Scenario& sc, const Flags& flags) {
  MethodRow row;
  row.method = "oma";
  try {
    const OmaSolution oma = oma_optimize_fractions(sc, flags.grid);
    row.total_power = oma.total_power;
    row.rates = sc.rate_min;
    row.feasible = WithinBudget(sc, oma.total_power);
  } catch (const InfeasibleError&) {
    row.feasible = false;
  }
  return row;
}

bool BruteSupported(int num_users) {
  try {
    return brute_force_config_count(num_users) <= kBruteForceConfigLimit;
  } catch (const SizeLimitError&) {
    return false;
  }
}

Scenario LoadScenario(const Flags& flags) {
  if (flags.scenario.empty()) return random_scenario(flags.seed, 2);
  return parse_scenario_file(flags.scenario);
}

void Emit(const Flags& flags, const CsvTable& table, std::ostream& out) {
  if (flags.out.empty()) {
    out << to_csv(table);
  } else {
    export_csv(table, flags.out);
  }
}

void Timing(std::ostream& err, const std::string& what, const Stopwatch& w) {
  err << what << " wall_time_s=" << format_number(w.Seconds()) << "\n";
}

int CmdRegion(const Flags& flags, std::ostream& out, std::ostream& err) {
  const Scenario sc = LoadScenario(flags);
  if (sc.num_users() != 2) {
    throw ValidationError("num_users", "region needs exactly 2 users");
  }
  if (!sc.power_budget) {
    throw ValidationError("power_budget",
                          "region needs a total power budget to scan");
  }
  Stopwatch w;
  const BoundarySample sample =
      boundary_scan_2user(sc.channel, *sc.power_budget, flags.grid);
  CsvTable table;
  table.header = {"r1_bits", "r2_bits", "config_id", "p11", "p12", "p21", "p22"};
  for (const BoundaryPoint& p : sample.points) {
    table.AddRow({format_number(p.r1), format_number(p.r2),
                  std::to_string(p.config_id), format_number(p.powers(0, 0)),
                  format_number(p.powers(0, 1)), format_number(p.powers(1, 0)),
                  format_number(p.powers(1, 1))});
  }
  Timing(err, "region", w);
  Emit(flags, table, out);
  return kExitOk;
}

int EmitSingle(const Flags& flags, const Scenario& sc, const MethodRow& row,
               std::ostream& out) {
  if (!row.feasible) throw Infeasible(row.method + ": no feasible allocation");
  Emit(flags, ReportTable(sc, {row}), out);
  return kExitOk;
}

int CmdMinpic(const Flags& flags, std::ostream& out, std::ostream& err) {
  const Scenario sc = LoadScenario(flags);
  Stopwatch w;
  const MethodRow row = RunMinpic(sc, flags, nullptr);
  Timing(err, "minpic", w);
  return EmitSingle(flags, sc, row, out);
}

int CmdBrute(const Flags& flags, std::ostream& out, std::ostream& err) {
  const Scenario sc = LoadScenario(flags);
  Stopwatch w;
  const MethodRow row = RunBrute(sc, flags);
  Timing(err, "brute", w);
  return EmitSingle(flags, sc, row, out);
}

int CmdOma(const Flags& flags, std::ostream& out, std::ostream& err) {
  const Scenario sc = LoadScenario(flags);
  Stopwatch w;
  const MethodRow row = RunOma(sc, flags);
  Timing(err, "oma", w);
  return EmitSingle(flags, sc, row, out);
}

int CmdTimeShare(const Flags& flags, std::ostream& out, std::ostream& err) {
  const Scenario sc = LoadScenario(flags);
  Stopwatch w;
  Solution sol;
  RunMinpic(sc, flags, &sol);
  const TimeShareRun run = RunTimeShare(sc, flags, sol);
  Timing(err, "timeshare", w);
  if (!run.schedule || !WithinBudget(sc, run.schedule->avg_power)) {
    throw Infeasible("timeshare: no feasible schedule");
  }
  const int n = sc.num_users();
  CsvTable table;
  table.header = {"config_id", "theta", "power"};
  for (int k = 1; k <= n; ++k) table.header.push_back("r" + std::to_string(k));
  for (std::size_t v = 0; v < run.vertices.size(); ++v) {
    const double theta = run.schedule->theta[v];
    if (theta <= 0.0) continue;
    const VertexPoint& vp = run.vertices[v];
    std::vector<std::string> cells = {std::to_string(vp.config_id),
                                      format_number(theta),
                                      format_number(vp.power)};
    for (double r : vp.rates) cells.push_back(format_number(r));
    table.AddRow(std::move(cells));
  }
  err << "timeshare avg_power=" << format_number(run.schedule->avg_power)
      << "\n";
  Emit(flags, table, out);
  return kExitOk;
}

int CmdCompare(const Flags& flags, std::ostream& out, std::ostream& err) {
  const Scenario sc = LoadScenario(flags);
  std::vector<MethodRow> rows;
  Solution sol;
  {
    Stopwatch w;
    rows.push_back(RunMinpic(sc, flags, &sol));
    Timing(err, "minpic", w);
  }
  if (BruteSupported(sc.num_users())) {
    Stopwatch w;
    rows.push_back(RunBrute(sc, flags));
    Timing(err, "brute", w);
  }
  {
    Stopwatch w;
    rows.push_back(TimeShareRow(sc, RunTimeShare(sc, flags, sol)));
    Timing(err, "timeshare", w);
  }
  {
    Stopwatch w;
    rows.push_back(RunOma(sc, flags));
    Timing(err, "oma", w);
  }
  Emit(flags, ReportTable(sc, rows), out);
  if (!rows.front().feasible) throw Infeasible("minpic: no feasible allocation");
  return kExitOk;
}

int CmdEpiBounds(const Flags& flags, std::ostream& out, std::ostream& err) {
  const Scenario sc = LoadScenario(flags);
  const int n = sc.num_users();
  const std::size_t un = static_cast<std::size_t>(n);
  Stopwatch w;
  Matrix h(n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) h(j, i) = std::sqrt(sc.channel.gain(j, i));
  }
  const double per_user = sc.power_budget ? *sc.power_budget / n : 1.0;
  const std::vector<double> p(un, per_user);
  const std::vector<double> noise(sc.channel.noises().begin(),
                                  sc.channel.noises().end());

  Matrix correlation(n, 0.5);
  for (int i = 0; i < n; ++i) correlation(i, i) = 1.0;
  const CovarianceFactor factor = factor_covariance(correlation);

  // Uniform noise of the same variance v has entropy power 6 v / (pi e).
  NoiseSpec uniform;
  uniform.variance = noise;
  for (double v : noise) {
    uniform.entropy_power.push_back(entropy_power(std::log(std::sqrt(12.0 * v))));
  }

  std::vector<double> h_diag;
  Matrix ncov(n);
  for (int j = 0; j < n; ++j) {
    h_diag.push_back(h(j, j));
    ncov(j, j) = noise[static_cast<std::size_t>(j)];
  }

  const std::vector<std::pair<std::string, double>> bounds = {
      {"independent_inputs",
       sum_rate_bound_correlated(h, Matrix::Identity(n), p,
                                 NoiseSpec::Gaussian(noise))},
      {"correlated_inputs",
       sum_rate_bound_correlated(h, factor.a, p, NoiseSpec::Gaussian(noise))},
      {"non_gaussian_noise",
       sum_rate_bound_correlated(h, Matrix::Identity(n), p, uniform, true)},
      {"joint_receivers", joint_sum_rate_bound(h_diag, p, ncov)},
  };
  CsvTable table;
  table.header = {"bound_name", "value_nats", "value_bits"};
  for (const auto& [name, nats] : bounds) {
    table.AddRow({name, format_number(nats), format_number(nats / std::log(2.0))});
  }
  Timing(err, "epi-bounds", w);
  Emit(flags, table, out);
  return kExitOk;
}

}  // namespace

int run_command(std::span<const std::string> args, std::ostream& out,
                std::ostream& err) {
  CLI::App app{"Interference-channel rate regions and power minimization",
               "icmac"};
  app.require_subcommand(1);
  Flags flags;

  using Handler = std::function<int(const Flags&, std::ostream&, std::ostream&)>;
  const std::vector<std::tuple<std::string, std::string, Handler>> commands = {
      {"region", "2-user rate region boundary", CmdRegion},
      {"minpic", "minimum sum power via local search", CmdMinpic},
      {"brute", "minimum sum power by exhaustive search", CmdBrute},
      {"timeshare", "time-sharing schedule", CmdTimeShare},
      {"oma", "orthogonal multiple access baseline", CmdOma},
      {"compare", "report row for every method", CmdCompare},
      {"epi-bounds", "entropy-power sum-rate bounds", CmdEpiBounds},
  };
  std::vector<CLI::App*> subs;
  for (const auto& [name, help, handler] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--scenario", flags.scenario, "scenario JSON file")
        ->check(CLI::ExistingFile);
    sub->add_option("--out", flags.out, "CSV output path");
    sub->add_option("--tol", flags.tol, "fixed-point relative tolerance")
        ->check(CLI::PositiveNumber);
    sub->add_option("--seed", flags.seed, "seed for the random scenario");
    sub->add_option("--grid", flags.grid, "grid resolution")
        ->check(CLI::Range(2, 1 << 20));
    subs.push_back(sub);
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitInvalid;
  }

  for (std::size_t c = 0; c < subs.size(); ++c) {
    if (!subs[c]->parsed()) continue;
    try {
      return std::get<2>(commands[c])(flags, out, err);
    } catch (const Infeasible& e) {
      err << "infeasible: " << e.what() << "\n";
      return kExitInfeasible;
    } catch (const InfeasibleError& e) {
      err << "infeasible: " << e.what() << "\n";
      return kExitInfeasible;
    } catch (const std::logic_error& e) {
      err << "error: " << e.what() << "\n";
      return kExitInvalid;
    } catch (const std::runtime_error& e) {
      err << "error: " << e.what() << "\n";
      return kExitInvalid;
    }
  }
  return kExitInvalid;
}

}  // namespace icmac
