#include "macrofin/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <fmt/format.h>

#include "macrofin/parallel.hpp"

namespace macrofin {
namespace {

struct RunOutcome {
  bool crisis = false;
  bool blowup = false;
  double t = 0.0;
};

struct PointTask {
  ModelParams params;
  std::size_t result_index;
};

RunOutcome run_one(const ModelParams& p, const SimConfig& cfg, const CrisisCriterion& c,
                   std::size_t run) {
  const Trajectory traj = simulate_path(cfg, p, run, c);
  RunOutcome out;
  out.blowup = traj.status == PathStatus::blowup && traj.status_time <= c.horizon + 1e-9;
  if (auto ev = detect_crisis(traj, c)) {
    out.crisis = true;
    out.t = ev->t;
  }
  return out;
}

McResult summarize(std::vector<std::pair<std::string, double>> point,
                   const std::vector<RunOutcome>& runs) {
  McResult r;
  r.point = std::move(point);
  r.n_runs = runs.size();
  double t_sum = 0.0;
  for (const auto& o : runs) {
    if (o.crisis) {
      ++r.n_crisis;
      t_sum += o.t;
    }
    if (o.blowup) ++r.n_blowup;
  }
  r.p_hat = r.n_runs ? static_cast<double>(r.n_crisis) / static_cast<double>(r.n_runs) : 0.0;
  const auto ci = wilson_interval(r.n_crisis, r.n_runs);
  r.ci_low = ci.low;
  r.ci_high = ci.high;
  r.mean_crisis_time = r.n_crisis ? t_sum / static_cast<double>(r.n_crisis)
                                  : std::numeric_limits<double>::quiet_NaN();
  return r;
}

SimConfig clipped(const SimConfig& cfg, const CrisisCriterion& c) {
  SimConfig out = cfg;
  out.t_end = std::min(cfg.t_end, c.horizon);
  out.dt = std::min(out.dt, out.t_end);
  return out;
}

// Runs every (point, run) pair of the valid points on one pool.
std::vector<std::vector<RunOutcome>> run_points(const std::vector<ModelParams>& points,
                                                const SimConfig& cfg, const CrisisCriterion& c,
                                                std::size_t n_runs, const McOptions& opt) {
  std::vector<std::vector<RunOutcome>> outcomes(points.size(), std::vector<RunOutcome>(n_runs));
  const SimConfig sim = clipped(cfg, c);
  const std::size_t total = points.size() * n_runs;
  std::atomic<std::size_t> done{0};
  parallel_for(total, opt.workers, [&](std::size_t task) {
    const std::size_t point = task / n_runs;
    const std::size_t run = task % n_runs;
    outcomes[point][run] = run_one(points[point], sim, c, run);
    const std::size_t finished = done.fetch_add(1, std::memory_order_relaxed) + 1;
    if (opt.progress) opt.progress(finished, total);
  });
  return outcomes;
}

const ParamField& field_or_throw(std::string_view name) {
  const ParamField* f = find_param_field(name);
  if (!f) throw std::invalid_argument(fmt::format("unknown parameter '{}'", name));
  return *f;
}

std::string violation_text(const std::vector<Violation>& vs) {
  std::string out;
  for (const auto& v : vs) {
    if (!out.empty()) out += "; ";
    out += describe(v);
  }
  return out;
}

// Shared machinery of the 1-D and 2-D sweeps: validates each point and runs
// the valid ones together.
std::vector<McResult> run_sweep(std::vector<std::vector<std::pair<std::string, double>>> points,
                                const ModelParams& base, const SimConfig& cfg,
                                const CrisisCriterion& c, std::size_t n_runs,
                                const McOptions& opt) {
  std::vector<McResult> results(points.size());
  std::vector<ModelParams> valid;
  std::vector<std::size_t> slot;
  for (std::size_t i = 0; i < points.size(); ++i) {
    ModelParams p = base;
    for (const auto& [name, value] : points[i]) p.*field_or_throw(name).member = value;
    auto violations = validate(p);
    if (!violations.empty()) {
      results[i].point = points[i];
      results[i].mean_crisis_time = std::numeric_limits<double>::quiet_NaN();
      results[i].ci_high = 1.0;
      results[i].error = violation_text(violations);
      continue;
    }
    valid.push_back(p);
    slot.push_back(i);
  }
  const auto outcomes = run_points(valid, cfg, c, n_runs, opt);
  for (std::size_t k = 0; k < valid.size(); ++k) {
    results[slot[k]] = summarize(points[slot[k]], outcomes[k]);
  }
  return results;
}

double parse_number(std::string_view text, std::string_view spec) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw std::invalid_argument(fmt::format("axis '{}': '{}' is not a number", spec, text));
  }
  return v;
}

}  // namespace

std::optional<CrisisEvent> detect_crisis(const Trajectory& traj, const CrisisCriterion& c) {
  for (const auto& s : traj.samples) {
    if (s.t > c.horizon + 1e-9) break;
    if (auto why = crisis_condition(s.econ, c)) return CrisisEvent{*why, s.t};
  }
  if (traj.status == PathStatus::blowup && c.count_blowup_as_crisis &&
      traj.status_time <= c.horizon + 1e-9) {
    return CrisisEvent{CrisisReason::blowup, traj.status_time};
  }
  return std::nullopt;
}

WilsonInterval wilson_interval(std::size_t k, std::size_t n, double z) {
  if (n == 0) return {0.0, 1.0};
  const double nn = static_cast<double>(n);
  const double p = static_cast<double>(k) / nn;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / nn;
  const double center = (p + z2 / (2.0 * nn)) / denom;
  const double half = z / denom * std::sqrt(p * (1.0 - p) / nn + z2 / (4.0 * nn * nn));
  return {std::clamp(std::min(center - half, p), 0.0, 1.0),
          std::clamp(std::max(center + half, p), 0.0, 1.0)};
}

McResult estimate(const ModelParams& point, const SimConfig& cfg, const CrisisCriterion& c,
                  std::size_t n_runs, const McOptions& opt) {
  if (n_runs == 0) throw std::invalid_argument("estimate: n_runs must be >= 1");
  const auto outcomes = run_points({point}, cfg, c, n_runs, opt);
  return summarize({}, outcomes.front());
}

std::vector<McResult> sweep_1d(std::string_view param_name, const std::vector<double>& values,
                               const ModelParams& base, const SimConfig& cfg,
                               const CrisisCriterion& c, std::size_t n_runs,
                               const McOptions& opt) {
  const auto& field = field_or_throw(param_name);
  std::vector<std::vector<std::pair<std::string, double>>> points;
  for (double v : values) points.push_back({{std::string(field.name), v}});
  return run_sweep(std::move(points), base, cfg, c, n_runs, opt);
}

McGrid sweep_2d(std::string_view p1_name, const std::vector<double>& p1_values,
                std::string_view p2_name, const std::vector<double>& p2_values,
                const ModelParams& base, const SimConfig& cfg, const CrisisCriterion& c,
                std::size_t n_runs, const McOptions& opt) {
  McGrid grid{std::string(field_or_throw(p1_name).name), std::string(field_or_throw(p2_name).name),
              p1_values, p2_values, {}};
  std::vector<std::vector<std::pair<std::string, double>>> points;
  for (double a : p1_values) {
    for (double b : p2_values) points.push_back({{grid.p1_name, a}, {grid.p2_name, b}});
  }
  grid.cells = run_sweep(std::move(points), base, cfg, c, n_runs, opt);
  return grid;
}

AxisSpec parse_axis(std::string_view spec) {
  std::vector<std::string_view> parts;
  std::string_view rest = spec;
  for (;;) {
    const auto colon = rest.find(':');
    parts.push_back(rest.substr(0, colon));
    if (colon == std::string_view::npos) break;
    rest = rest.substr(colon + 1);
  }
  const bool log_spacing = parts.size() == 5 && parts[4] == "log";
  if (parts.size() != 4 && !log_spacing) {
    throw std::invalid_argument(
        fmt::format("axis '{}': expected name:start:stop:count[:log]", spec));
  }
  AxisSpec axis;
  axis.name = std::string(parts[0]);
  if (!find_param_field(axis.name)) {
    throw std::invalid_argument(fmt::format("axis '{}': unknown parameter '{}'", spec, axis.name));
  }
  const double start = parse_number(parts[1], spec);
  const double stop = parse_number(parts[2], spec);
  int count = 0;
  auto [ptr, ec] = std::from_chars(parts[3].data(), parts[3].data() + parts[3].size(), count);
  if (ec != std::errc{} || ptr != parts[3].data() + parts[3].size() || count < 1) {
    throw std::invalid_argument(fmt::format("axis '{}': count must be a positive integer", spec));
  }
  if (log_spacing && !(start > 0.0 && stop > 0.0)) {
    throw std::invalid_argument(fmt::format("axis '{}': log spacing needs positive ends", spec));
  }
  for (int i = 0; i < count; ++i) {
    const double frac = count == 1 ? 0.0 : static_cast<double>(i) / (count - 1);
    double v = log_spacing ? start * std::pow(stop / start, frac) : start + (stop - start) * frac;
    if (i == count - 1 && count > 1) v = stop;
    axis.values.push_back(v);
  }
  return axis;
}

}  // namespace macrofin

namespace macrofin {

unsigned default_workers() {
  if (const char* env = std::getenv("MACROFIN_WORKERS")) {
    unsigned n = 0;
    auto [ptr, ec] = std::from_chars(env, env + std::strlen(env), n);
    if (ec == std::errc{} && n > 0) return n;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace macrofin
