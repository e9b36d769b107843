#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "macrofin/crisis.hpp"
#include "macrofin/econ.hpp"
#include "macrofin/market.hpp"
#include "macrofin/params.hpp"
#include "macrofin/rng.hpp"

namespace macrofin {

enum class JumpKind { down_price, up_price };

std::string_view to_string(JumpKind k);

struct JumpEvent {
  double t = 0.0;
  JumpKind kind = JumpKind::down_price;
  double factor = 1.0;
};

/// Everything evaluated at the left end of a step: the lending rate, the
/// economy's derived quantities at that rate, and the jump intensities.
struct StepPlan {
  double r = 0.0;
  EconDerived derived;
  JumpIntensities lams;
};

StepPlan plan_step(const EconState& s, const MarketState& mkt, const ModelParams& p);

/// Random inputs of one step: a standard normal shared by ln S and mu, and
/// the number of jumps of each kind.
struct StepNoise {
  double z = 0.0;
  int n_up = 0;
  int n_down = 0;
};

/// Draws the noise for step `step` from slots 0 (Gaussian), 1 and 2 (jump
/// uniforms). A jump of each kind occurs with probability 1 - exp(-lam dt).
StepNoise draw_step_noise(const RngStream& rng, std::uint64_t step, const JumpIntensities& lams,
                          double dt);

/// Market half of a step: Euler on (ln S, mu) with the shared Gaussian and
/// the compensators at intensities `lams`, followed by the jumps in `noise`.
MarketState advance_market(const MarketState& mkt, const JumpIntensities& lams, double dt,
                           const StepNoise& noise, const ModelParams& p);

struct StepOutcome {
  EconState econ;
  MarketState market;
  /// Name of the first offending quantity when the step produced a state
  /// outside the admissible domain; nullptr otherwise.
  const char* blowup = nullptr;
};

/// Deterministic kernel of one step: RK4 on the economy with r frozen at
/// plan.r, Euler on (ln S, mu) with left-end intensities, then jumps.
StepOutcome advance(const EconState& s, const MarketState& mkt, const StepPlan& plan, double dt,
                    const StepNoise& noise, const ModelParams& p);

struct StepResult {
  EconState econ;
  MarketState market;
  std::vector<JumpEvent> jumps;
  const char* blowup = nullptr;
};

/// One step with noise drawn at the stream's current step counter; jump
/// events are stamped with time t + dt.
StepResult step(const EconState& s, const MarketState& mkt, double dt, const RngStream& rng,
                const ModelParams& p, double t = 0.0);

struct TrajectorySample {
  double t = 0.0;
  EconState econ;
  MarketState market;
  double pi = 0.0;
  double f = 0.0;
  double r = 0.0;
  double premium = 0.0;
  double s_disc = 0.0;  // e^{-r_l t} S
};

enum class PathStatus { completed, crisis, blowup };

std::string_view to_string(PathStatus s);

struct Trajectory {
  std::vector<TrajectorySample> samples;
  std::vector<JumpEvent> jumps;
  PathStatus status = PathStatus::completed;
  double status_time = 0.0;
  std::optional<CrisisReason> reason;
  std::string blowup_what;
};

TrajectorySample make_sample(double t, const EconState& s, const MarketState& mkt,
                             const ModelParams& p);

/// Largest |m| + |ell| tolerated before a path is declared blown up: ten times
/// the a-priori debt cap over the horizon.
double blowup_debt_limit(const SimConfig& cfg, const ModelParams& p);

/// Advances the coupled system from t = 0 to cfg.t_end, recording every
/// cfg.record_stride steps and at the final time. When `crisis` is given the
/// path stops at the first recorded sample meeting the criterion. Non-finite
/// states end the path with status blowup. Deterministic in
/// (cfg.seed, run_index).
Trajectory simulate_path(const SimConfig& cfg, const ModelParams& p, std::uint64_t run_index,
                         const std::optional<CrisisCriterion>& crisis = CrisisCriterion{});

/// Recorded drivers of the market block on a uniform grid with n steps:
/// Brownian increments and jump counts per step (jumps act at the step's end)
/// and the intensities at the n + 1 grid points.
struct MarketNoisePath {
  double dt = 0.0;
  std::vector<double> dw;
  std::vector<int> n_up;
  std::vector<int> n_down;
  std::vector<JumpIntensities> lams;
};

struct MarketPath {
  std::vector<double> s;
  std::vector<double> mu;
};

/// Pathwise oracle: the explicit Doleans-Dade solution for S and the
/// variation-of-constants solution for mu, driven by recorded noise.
/// Intensities are interpolated linearly between grid points and the drift
/// integrals are evaluated exactly for that interpolant. Throws
/// std::invalid_argument on mismatched lengths.
MarketPath closed_form_market(const MarketNoisePath& noise, const MarketState& init,
                              const ModelParams& p);

}  // namespace macrofin
