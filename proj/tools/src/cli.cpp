#include "macrofin/cli.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "macrofin/analytics.hpp"
#include "macrofin/config.hpp"
#include "macrofin/csv.hpp"
#include "macrofin/montecarlo.hpp"
#include "macrofin/parallel.hpp"

namespace macrofin::cli {
namespace {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CommonArgs {
  std::string config_path;
  std::vector<std::string> sets;
  std::string out = "-";
};

void add_common(CLI::App* sub, CommonArgs& a) {
  sub->add_option("-c,--config", a.config_path, "Configuration file (key = value)");
  sub->add_option("--set", a.sets, "Override key=value; repeatable, applied left to right")
      ->expected(1)
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  sub->add_option("-o,--out", a.out, "Output CSV path, '-' for stdout")->capture_default_str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(fmt::format("cannot read {}", path));
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

LoadedConfig resolve_config(const CommonArgs& a) {
  LoadedConfig cfg = a.config_path.empty() ? LoadedConfig{default_params(), default_sim_config()}
                                           : load_config(read_file(a.config_path));
  for (const auto& s : a.sets) {
    const auto [key, value] = split_assignment(s);
    apply_setting(cfg, key, value);
  }
  require_valid(cfg);
  return cfg;
}

void emit(const std::string& path, const std::string& body, std::ostream& out) {
  if (path == "-") {
    out << body;
    out.flush();
    return;
  }
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError(fmt::format("cannot open {} for writing", path));
  f << body;
  f.close();
  if (!f) throw IoError(fmt::format("write to {} failed", path));
}

std::string sibling_jumps_path(const std::string& out) {
  if (out == "-") return {};
  const auto dot = out.rfind('.');
  const auto slash = out.find_last_of('/');
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) {
    return out + "_jumps";
  }
  return out.substr(0, dot) + "_jumps" + out.substr(dot);
}

std::string criterion_text(const CrisisCriterion& c) {
  return fmt::format("e_floor={} debt_ceiling={} horizon={}", c.e_floor, c.debt_ceiling,
                     c.horizon);
}

/// Line-oriented progress on stderr at every tenth of the work.
class Progress {
 public:
  Progress(std::ostream& err, std::string label) : err_(err), label_(std::move(label)) {}

  void operator()(std::size_t done, std::size_t total) {
    std::lock_guard lock(mutex_);
    const std::size_t decile = total == 0 ? 10 : done * 10 / total;
    if (decile <= last_) return;
    last_ = decile;
    err_ << fmt::format("{}: {}/{} runs\n", label_, done, total) << std::flush;
  }

 private:
  std::ostream& err_;
  std::string label_;
  std::mutex mutex_;
  std::size_t last_ = 0;
};

McOptions mc_options(Progress& progress) {
  McOptions opt;
  opt.workers = default_workers();
  opt.progress = [&progress](std::size_t done, std::size_t total) { progress(done, total); };
  return opt;
}

std::string format_validation(const std::vector<ValidationRow>& rows, const std::string& comment) {
  std::string s = fmt::format("# {}\nquantity,formula,simulated,std_error,tolerance,pass\n", comment);
  for (const auto& r : rows) {
    s += fmt::format("{},{},{},{},{},{}\n", r.quantity, format_number(r.formula),
                     format_number(r.simulated), format_number(r.std_error),
                     format_number(r.tolerance), r.pass ? "pass" : "FAIL");
  }
  return s;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Stochastic macro-financial model: simulation and crisis-probability sweeps",
               "macrofin"};
  app.require_subcommand(1);
  app.fallthrough(false);

  CommonArgs sim_args, sweep_args, heat_args, val_args;

  auto* simulate = app.add_subcommand("simulate", "Simulate one path; write trajectory and jumps");
  add_common(simulate, sim_args);
  std::string jumps_out;
  std::uint64_t run_index = 0;
  bool stop_at_crisis = false;
  simulate->add_option("--jumps", jumps_out, "Jump CSV path (default: <out>_jumps.csv)");
  simulate->add_option("--run-index", run_index, "Monte Carlo run index of the path")
      ->capture_default_str();
  simulate->add_flag("--stop-at-crisis", stop_at_crisis, "End the path at the first crisis");

  auto* sweep = app.add_subcommand("sweep", "Crisis probability along one parameter axis");
  add_common(sweep, sweep_args);
  std::string sweep_axis;
  std::size_t sweep_runs = 500;
  sweep->add_option("--axis", sweep_axis, "name:start:stop:count[:log]")->required();
  sweep->add_option("--runs", sweep_runs, "Runs per point")->capture_default_str();

  auto* heatmap = app.add_subcommand("heatmap", "Crisis probability over a two-parameter grid");
  add_common(heatmap, heat_args);
  std::vector<std::string> heat_axes;
  std::size_t heat_runs = 300;
  heatmap->add_option("--axis", heat_axes, "name:start:stop:count[:log], given twice")
      ->required()
      ->expected(1)
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  heatmap->add_option("--runs", heat_runs, "Runs per cell")->capture_default_str();

  auto* validate = app.add_subcommand("validate", "Compare simulated moments with closed forms");
  add_common(validate, val_args);
  ValidationOptions vopt;
  validate->add_option("--runs", vopt.runs, "Paths for the jump-free checks")->capture_default_str();
  validate->add_option("--horizon", vopt.horizon, "Years per path")->capture_default_str();
  validate->add_option("--burn-in", vopt.burn_in, "Years discarded per path")
      ->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return exit_ok;
    }
    err << "error: " << e.what() << "\n\n";
    const auto subs = app.get_subcommands();
    err << (subs.empty() ? app.help() : subs.front()->help());
    return exit_usage;
  }

  auto usage_of = [&](CLI::App* sub) { return sub->help(); };
  CLI::App* active = app.get_subcommands().front();

  try {
    if (active == simulate) {
      const auto cfg = resolve_config(sim_args);
      const std::optional<CrisisCriterion> stop =
          stop_at_crisis ? std::optional<CrisisCriterion>(CrisisCriterion{}) : std::nullopt;
      const Trajectory traj = simulate_path(cfg.sim, cfg.params, run_index, stop);
      const std::string comment =
          fmt::format("{} run_index={}", describe_inline(cfg), run_index);
      std::ostringstream t, j;
      write_trajectory_csv(t, traj, comment);
      write_jumps_csv(j, traj, comment);
      const std::string jpath = jumps_out.empty() ? sibling_jumps_path(sim_args.out) : jumps_out;
      if (jpath.empty()) throw UsageError("--jumps is required when --out is '-'");
      emit(sim_args.out, t.str(), out);
      emit(jpath, j.str(), out);
      err << fmt::format("status={} t={} samples={} jumps={}\n", to_string(traj.status),
                         traj.status_time, traj.samples.size(), traj.jumps.size());
      return exit_ok;
    }

    if (active == sweep) {
      const auto cfg = resolve_config(sweep_args);
      const AxisSpec axis = parse_axis(sweep_axis);
      if (!find_param_field(axis.name)) throw UsageError("unknown parameter " + axis.name);
      const CrisisCriterion c;
      Progress progress(err, "sweep " + axis.name);
      const auto rows =
          sweep_1d(axis.name, axis.values, cfg.params, cfg.sim, c, sweep_runs, mc_options(progress));
      const std::string comment = fmt::format("{} {} runs={} axis={}", describe_inline(cfg),
                                              criterion_text(c), sweep_runs, sweep_axis);
      std::ostringstream s;
      write_sweep_csv(s, axis.name, rows, comment);
      emit(sweep_args.out, s.str(), out);
      return exit_ok;
    }

    if (active == heatmap) {
      const auto cfg = resolve_config(heat_args);
      if (heat_axes.size() != 2) throw UsageError("heatmap needs exactly two --axis options");
      const AxisSpec a1 = parse_axis(heat_axes[0]);
      const AxisSpec a2 = parse_axis(heat_axes[1]);
      for (const auto* a : {&a1, &a2}) {
        if (!find_param_field(a->name)) throw UsageError("unknown parameter " + a->name);
      }
      const CrisisCriterion c;
      Progress progress(err, fmt::format("heatmap {}x{}", a1.name, a2.name));
      const McGrid grid = sweep_2d(a1.name, a1.values, a2.name, a2.values, cfg.params, cfg.sim, c,
                                   heat_runs, mc_options(progress));
      const std::string comment =
          fmt::format("{} {} runs={} axis1={} axis2={}", describe_inline(cfg), criterion_text(c),
                      heat_runs, heat_axes[0], heat_axes[1]);
      std::ostringstream s;
      write_heatmap_csv(s, grid, comment);
      emit(heat_args.out, s.str(), out);
      return exit_ok;
    }

    // validate
    const auto cfg = resolve_config(val_args);
    if (vopt.runs == 0 || !(vopt.horizon > vopt.burn_in) || vopt.burn_in < 0) {
      throw UsageError("validate needs runs >= 1 and 0 <= burn-in < horizon");
    }
    vopt.dt = cfg.sim.dt;
    vopt.seed = cfg.sim.seed;
    vopt.workers = default_workers();
    const auto rows = run_validation(cfg.params, cfg.sim, vopt);
    const std::string comment =
        fmt::format("{} runs={} horizon={} burn_in={}", describe_inline(cfg), vopt.runs,
                    vopt.horizon, vopt.burn_in);
    emit(val_args.out, format_validation(rows, comment), out);
    const auto failed = std::count_if(rows.begin(), rows.end(), [](const auto& r) { return !r.pass; });
    if (failed > 0) {
      err << fmt::format("{} of {} checks failed\n", failed, rows.size());
      return exit_validation;
    }
    return exit_ok;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return exit_io;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    if (e.kind() == ConfigError::Kind::validation) return exit_validation;
    err << '\n' << usage_of(active);
    return exit_usage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n\n" << usage_of(active);
    return exit_usage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n\n" << usage_of(active);
    return exit_usage;
  }
}

}  // namespace macrofin::cli
