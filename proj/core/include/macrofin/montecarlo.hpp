#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "macrofin/crisis.hpp"
#include "macrofin/integrator.hpp"
#include "macrofin/params.hpp"

namespace macrofin {

struct CrisisEvent {
  CrisisReason reason;
  double t;
};

/// First recorded sample within the horizon at which e <= e_floor or
/// ell - m >= debt_ceiling; failing that, the blow-up time when the path
/// blew up inside the horizon and blow-ups count.
std::optional<CrisisEvent> detect_crisis(const Trajectory& traj, const CrisisCriterion& c);

struct WilsonInterval {
  double low;
  double high;
};

/// 95% Wilson score interval for k successes in n trials (z = 1.96).
WilsonInterval wilson_interval(std::size_t k, std::size_t n, double z = 1.959963984540054);

struct McResult {
  std::vector<std::pair<std::string, double>> point;
  std::size_t n_runs = 0;
  std::size_t n_crisis = 0;
  double p_hat = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
  std::size_t n_blowup = 0;
  double mean_crisis_time = 0.0;  // NaN when no run hit a crisis
  std::optional<std::string> error;
};

struct McOptions {
  unsigned workers = 1;
  /// Called with (finished runs, total runs) from worker threads.
  std::function<void(std::size_t, std::size_t)> progress;
};

/// Crisis probability over runs 0..n_runs-1 of simulate_path at `point`.
/// Paths are simulated up to min(cfg.t_end, c.horizon).
McResult estimate(const ModelParams& point, const SimConfig& cfg, const CrisisCriterion& c,
                  std::size_t n_runs, const McOptions& opt = {});

/// One McResult per value of `param_name`, all other fields at `base`, in
/// input order. Values that make the parameter set invalid yield a result
/// with `error` set and no runs. Throws std::invalid_argument for an unknown
/// field name.
std::vector<McResult> sweep_1d(std::string_view param_name, const std::vector<double>& values,
                               const ModelParams& base, const SimConfig& cfg,
                               const CrisisCriterion& c, std::size_t n_runs,
                               const McOptions& opt = {});

struct McGrid {
  std::string p1_name;
  std::string p2_name;
  std::vector<double> p1_values;
  std::vector<double> p2_values;
  std::vector<McResult> cells;  // row-major: p1 outer, p2 inner

  const McResult& at(std::size_t i, std::size_t j) const { return cells[i * p2_values.size() + j]; }
};

McGrid sweep_2d(std::string_view p1_name, const std::vector<double>& p1_values,
                std::string_view p2_name, const std::vector<double>& p2_values,
                const ModelParams& base, const SimConfig& cfg, const CrisisCriterion& c,
                std::size_t n_runs, const McOptions& opt = {});

/// Sweep axis "name:start:stop:count" with an optional ":log" suffix for
/// geometric spacing. Throws std::invalid_argument on malformed specs.
struct AxisSpec {
  std::string name;
  std::vector<double> values;
};
AxisSpec parse_axis(std::string_view spec);

}  // namespace macrofin
