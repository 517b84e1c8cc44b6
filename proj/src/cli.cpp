// Copyright 2026 The zeroorder Authors
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

#include "zo/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <variant>

#include <CLI11.hpp>

#include "zo/checks.hpp"
#include "zo/diagnostics.hpp"
#include "zo/external.hpp"
#include "zo/io.hpp"
#include "zo/regret.hpp"
#include "zo/stats.hpp"

namespace zo {

namespace {

MirrorSetup setup_from_config(const ExperimentConfig& config, int d) {
  if (config.geometry == "simplex") return MirrorSetup::entropic_simplex(d);
  return MirrorSetup::euclidean_ball(d, config.radius);
}

ScheduleParams schedule_from_config(const ExperimentConfig& config, const MirrorSetup& setup,
                                    double g2, int d, std::int64_t T) {
  ScheduleParams sched = default_parameters(setup, g2, d, T);
  if (config.eta) sched.eta = *config.eta;
  if (config.delta) sched.delta0 = *config.delta;
  return sched;
}

// One finished replication, or the round at which its oracle failed.
struct RepOutcome {
  BenchRow row;
  bool aborted = false;
};

std::ostream& open_output(const ExperimentConfig& config, std::ofstream& file) {
  if (config.output.empty()) return std::cout;
  file.open(config.output, std::ios::binary);
  if (!file) throw ConfigError("output", "cannot open '" + config.output + "' for writing");
  return file;
}

}  // namespace

StreamFactory builtin_stream_factory() {
  return [](const ExperimentConfig& config, int d, std::uint64_t stream_seed) {
    ObjectiveParams params;
    params.domain = config.geometry == "simplex"
                        ? Domain::simplex(d)
                        : Domain::l2_ball(d, config.radius);
    params.noise_std = config.noise_std;
    params.seed = stream_seed;
    return LossStream::builtin(config.objective, d, params);
  };
}

int cmd_bench(const ExperimentConfig& config, const StreamFactory& factory) {
  static const std::set<std::string> builtins = {"l2norm", "linear", "quadratic",
                                                 "abs_regression", "shifted_l1norm"};
  if (builtins.find(config.objective) == builtins.end()) {
    throw ConfigError("objective", "unknown objective '" + config.objective + "'");
  }

  struct Cell {
    int d;
    std::int64_t T;
  };
  std::vector<Cell> cells;
  for (int d : config.dims) {
    for (std::int64_t T : config.horizons) cells.push_back(Cell{d, T});
  }
  const int reps = config.replications;
  const std::int64_t jobs = static_cast<std::int64_t>(cells.size()) * reps;
  std::vector<RepOutcome> outcomes(static_cast<std::size_t>(jobs));

  parallel_for(jobs, [&](std::int64_t j) {
    const std::size_t ci = static_cast<std::size_t>(j / reps);
    const int rep = static_cast<int>(j % reps);
    const Cell cell = cells[ci];
    const std::uint64_t rep_seed = mix_seed(
        mix_seed(config.seed, static_cast<std::uint64_t>(ci)), static_cast<std::uint64_t>(rep));

    const MirrorSetup setup = setup_from_config(config, cell.d);
    LossStream stream = factory(config, cell.d, mix_seed(rep_seed, 2));
    const ScheduleParams sched =
        schedule_from_config(config, setup, stream.g2(), cell.d, cell.T);

    RepOutcome& out = outcomes[static_cast<std::size_t>(j)];
    out.row.rep = std::to_string(rep);
    out.row.seed = rep_seed;
    out.row.d = cell.d;
    out.row.T = cell.T;
    out.row.eta = sched.eta;
    out.row.delta = sched.delta0;
    try {
      const RunRecord record = run_bandit(stream, setup, sched, mix_seed(rep_seed, 1));
      const RegretReport report = regret(record, stream, {}, config.fvalue_samples);
      out.row.avg_regret = report.average_regret;
      out.row.opt_error = report.optimization_error;
      out.row.opt_error_se = report.optimization_error_se;
    } catch (const RunAborted& e) {
      out.aborted = true;
      out.row.status = "aborted";
      log_info(e.what());
    }
  });

  // Flush rows in deterministic order; stop at the first aborted replication.
  std::vector<BenchRow> rows;
  std::vector<CellNote> notes;
  std::optional<FitNote> fit;
  bool aborted = false;

  for (std::size_t ci = 0; ci < cells.size() && !aborted; ++ci) {
    std::vector<double> cell_regrets;
    std::vector<double> cell_errors;
    std::vector<double> cell_error_ses;
    for (int rep = 0; rep < reps; ++rep) {
      const RepOutcome& out = outcomes[ci * static_cast<std::size_t>(reps) +
                                       static_cast<std::size_t>(rep)];
      rows.push_back(out.row);
      if (out.aborted) {
        aborted = true;
        break;
      }
      cell_regrets.push_back(*out.row.avg_regret);
      if (out.row.opt_error) cell_errors.push_back(*out.row.opt_error);
      if (out.row.opt_error_se) cell_error_ses.push_back(*out.row.opt_error_se);
    }
    if (aborted) break;

    OnlineMoments regret_acc;
    for (double r : cell_regrets) regret_acc.add(r);
    BenchRow summary;
    summary.rep = "summary";
    summary.seed = config.seed;
    summary.d = cells[ci].d;
    summary.T = cells[ci].T;
    summary.eta = rows.back().eta;
    summary.delta = rows.back().delta;
    summary.avg_regret = regret_acc.mean();
    if (!cell_errors.empty()) {
      OnlineMoments err_acc;
      for (double e : cell_errors) err_acc.add(e);
      summary.opt_error = err_acc.mean();
      summary.opt_error_se = err_acc.std_error();
    }
    summary.status = "summary";
    rows.push_back(summary);
    notes.push_back(CellNote{cells[ci].d, cells[ci].T, regret_acc.std_error()});
  }

  if (!aborted && (config.dims.size() >= 2 || config.horizons.size() >= 2)) {
    std::vector<double> log_d, log_T, log_r;
    for (std::size_t ci = 0; ci < cells.size(); ++ci) {
      OnlineMoments acc;
      for (int rep = 0; rep < reps; ++rep) {
        const RepOutcome& out =
            outcomes[ci * static_cast<std::size_t>(reps) + static_cast<std::size_t>(rep)];
        acc.add(*out.row.avg_regret);
      }
      if (acc.mean() > 0.0) {
        log_d.push_back(std::log(static_cast<double>(cells[ci].d)));
        log_T.push_back(std::log(static_cast<double>(cells[ci].T)));
        log_r.push_back(std::log(acc.mean()));
      }
    }
    FitNote note;
    try {
      if (config.dims.size() >= 2 && config.horizons.size() >= 2) {
        const PlaneFit pf = ols_plane(log_d, log_T, log_r);
        note.alpha_d = pf.beta_x;
        note.alpha_d_se = pf.beta_x_se;
        note.alpha_T = pf.beta_y;
        note.alpha_T_se = pf.beta_y_se;
      } else if (config.dims.size() >= 2) {
        const LinearFit lf = ols_line(log_d, log_r);
        note.alpha_d = lf.slope;
        note.alpha_d_se = lf.slope_se;
      } else {
        const LinearFit lf = ols_line(log_T, log_r);
        note.alpha_T = lf.slope;
        note.alpha_T_se = lf.slope_se;
      }
      fit = note;
    } catch (const std::invalid_argument&) {
      // Degenerate fit (e.g. non-positive cell means); omit the exponent lines.
    }
  }

  std::ofstream file;
  std::ostream& out = open_output(config, file);
  if (config.format == "json") {
    write_bench_json(out, config.echo, rows, notes, fit);
  } else {
    write_bench_csv(out, config.echo, rows, notes, fit);
  }
  out.flush();
  return aborted ? kExitRunAborted : kExitOk;
}

int cmd_check(const ExperimentConfig& config) {
  std::vector<std::string> suites = config.suites;
  if (suites.empty() || (suites.size() == 1 && suites[0] == "all")) {
    suites = known_check_suites();
  }
  const std::vector<std::string> known = known_check_suites();
  for (const std::string& s : suites) {
    if (std::find(known.begin(), known.end(), s) == known.end()) {
      throw ConfigError("suite", "unknown check suite '" + s + "'");
    }
  }

  std::ostringstream report;
  bool all_passed = true;
  for (const std::string& s : suites) {
    const CheckResult result = run_check_suite(s, config.seed, config.samples);
    all_passed = all_passed && result.passed;
    report << (result.passed ? "PASS" : "FAIL") << " " << result.suite << ": " << result.detail
           << "\n";
  }
  std::cout << report.str();
  if (!config.output.empty()) {
    std::ofstream file(config.output, std::ios::binary);
    if (!file) throw ConfigError("output", "cannot open '" + config.output + "' for writing");
    file << "# zeroorder " << kVersion << "\n";
    for (const auto& [k, v] : config.echo) file << "# " << k << " = " << v << "\n";
    file << report.str();
  }
  return all_passed ? kExitOk : kExitRunAborted;
}

int cmd_optimize_external(const ExperimentConfig& config) {
  const int d = config.dims.front();
  std::int64_t T = config.horizons.front();
  if (config.budget) T = std::min(T, *config.budget / 2);
  if (T < 1) throw ConfigError("budget", "allows no full round (need >= 2 queries)");

  const MirrorSetup setup = setup_from_config(config, d);
  ExternalProcess child(ExternalProcess::split_command(config.child));

  LossStream stream = LossStream::fixed_custom(
      d, setup.domain, config.g2, [&child](const Vec& w) { return child.eval(w); });
  const ScheduleParams sched = schedule_from_config(config, setup, config.g2, d, T);

  const RunRecord record =
      run_bandit(stream, setup, sched, mix_seed(config.seed, 1), LossBookkeeping::kNone);
  child.shutdown();

  std::vector<TrajectoryPoint> trajectory;
  trajectory.reserve(record.estimates.size());
  for (std::size_t t = 0; t < record.estimates.size(); ++t) {
    trajectory.push_back(TrajectoryPoint{static_cast<std::int64_t>(t),
                                         record.estimates[t].f_plus,
                                         record.estimates[t].f_minus_or_anchor});
  }

  std::ofstream file;
  std::ostream& out = open_output(config, file);
  if (config.format == "json") {
    write_external_json(out, config.echo, trajectory, record.average_iterate);
  } else {
    write_external_csv(out, config.echo, trajectory, record.average_iterate);
  }
  out.flush();
  log_info("external optimization finished: " + std::to_string(child.request_count()) +
           " queries, average iterate " + format_vector(record.average_iterate, ','));
  return kExitOk;
}

namespace {

struct SubcommandState {
  std::map<std::string, std::string> overrides;
  std::string config_path;
};

void add_override_option(CLI::App* sub, SubcommandState& state, const std::string& flag,
                         const std::string& key, const std::string& help) {
  sub->add_option_function<std::string>(
      flag, [&state, key](const std::string& v) { state.overrides[key] = v; }, help);
}

int dispatch(const std::string& command, const SubcommandState& state) {
  std::map<std::string, std::string> kv;
  const bool from_file = !state.config_path.empty();
  if (from_file) kv = load_config_file(state.config_path);
  if (from_file && kv.find("seed") == kv.end()) {
    throw ConfigError("seed", "mandatory in config files");
  }
  for (const auto& [key, value] : state.overrides) kv[key] = value;  // flags win

  const ExperimentConfig config = ExperimentConfig::from_key_values(kv, command, from_file);
  if (config.seed_was_generated) {
    std::cerr << "seed = " << config.seed << "\n";
  }
  if (command == "bench") return cmd_bench(config);
  if (command == "check") return cmd_check(config);
  return cmd_optimize_external(config);
}

}  // namespace

int run_cli(int argc, char** argv) {
  CLI::App app{"zeroorder: two-point bandit convex optimization"};
  app.require_subcommand(1);

  SubcommandState bench_state, check_state, external_state;

  CLI::App* bench = app.add_subcommand("bench", "run regret benchmarks over a (d, T) grid");
  bench->add_option("--config", bench_state.config_path, "key = value config file");
  add_override_option(bench, bench_state, "--geometry", "geometry", "l2ball | simplex");
  add_override_option(bench, bench_state, "--radius", "radius", "ball radius");
  add_override_option(bench, bench_state, "--objective", "objective", "builtin objective name");
  add_override_option(bench, bench_state, "--d", "d", "dimension grid, comma separated");
  add_override_option(bench, bench_state, "--T", "T", "horizon grid, comma separated");
  add_override_option(bench, bench_state, "--replications", "replications", "replications per cell");
  add_override_option(bench, bench_state, "--seed", "seed", "master seed");
  add_override_option(bench, bench_state, "--eta", "eta", "step-size override");
  add_override_option(bench, bench_state, "--delta", "delta", "exploration-radius override");
  add_override_option(bench, bench_state, "--noise-std", "noise_std", "objective noise scale");
  add_override_option(bench, bench_state, "--fvalue-samples", "fvalue_samples",
                      "Monte-Carlo samples for F evaluation");
  add_override_option(bench, bench_state, "--output", "output", "result file (default stdout)");
  add_override_option(bench, bench_state, "--format", "format", "csv | json");

  CLI::App* check = app.add_subcommand("check", "run estimator/optimizer diagnostic suites");
  check->add_option("--config", check_state.config_path, "key = value config file");
  add_override_option(check, check_state, "--suite", "suite",
                      "comma-separated suites (default: all)");
  add_override_option(check, check_state, "--seed", "seed", "master seed");
  add_override_option(check, check_state, "--samples", "samples", "per-suite sample override");
  add_override_option(check, check_state, "--output", "output", "also write the report here");
  add_override_option(check, check_state, "--format", "format", "csv | json");

  CLI::App* external =
      app.add_subcommand("optimize-external", "optimize a black-box child process");
  external->add_option("--config", external_state.config_path, "key = value config file");
  add_override_option(external, external_state, "--child", "child",
                      "child command line (whitespace split)");
  add_override_option(external, external_state, "--geometry", "geometry", "l2ball | simplex");
  add_override_option(external, external_state, "--radius", "radius", "ball radius");
  add_override_option(external, external_state, "--d", "d", "dimension");
  add_override_option(external, external_state, "--T", "T", "horizon");
  add_override_option(external, external_state, "--budget", "budget", "max oracle queries");
  add_override_option(external, external_state, "--g2", "g2", "assumed Lipschitz constant");
  add_override_option(external, external_state, "--seed", "seed", "master seed");
  add_override_option(external, external_state, "--eta", "eta", "step-size override");
  add_override_option(external, external_state, "--delta", "delta", "exploration-radius override");
  add_override_option(external, external_state, "--output", "output",
                      "result file (default stdout)");
  add_override_option(external, external_state, "--format", "format", "csv | json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitConfigError;
  }

  try {
    if (bench->parsed()) return dispatch("bench", bench_state);
    if (check->parsed()) return dispatch("check", check_state);
    return dispatch("optimize-external", external_state);
  } catch (const ConfigError& e) {
    std::cerr << e.what() << "\n";
    return kExitConfigError;
  } catch (const ProtocolError& e) {
    std::cerr << "protocol error: " << e.what() << "\n";
    if (!e.exchange().empty()) std::cerr << "offending exchange:\n" << e.exchange() << "\n";
    return kExitProtocolError;
  } catch (const RunAborted& e) {
    std::cerr << e.what() << "\n";
    return kExitRunAborted;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRunAborted;
  }
}

}  // namespace zo
