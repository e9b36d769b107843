#include "macrofin/integrator.hpp"

#include <cmath>

namespace macrofin {
namespace {

EconState axpy(const EconState& x, double h, const EconState& k) {
  return {x.omega + h * k.omega, x.e + h * k.e, x.m + h * k.m, x.ell + h * k.ell};
}

const char* first_bad(const EconState& x, const MarketState& mkt) {
  if (!std::isfinite(x.omega)) return "omega";
  if (!std::isfinite(x.e)) return "e";
  if (!std::isfinite(x.m)) return "m";
  if (!std::isfinite(x.ell)) return "ell";
  if (!std::isfinite(mkt.s)) return "s";
  if (!std::isfinite(mkt.mu)) return "mu";
  if (!(x.omega > 0.0)) return "omega";
  if (!(x.e > 0.0)) return "e";
  if (!(mkt.s > 0.0)) return "s";
  return nullptr;
}

}  // namespace

std::string_view to_string(CrisisReason r) {
  switch (r) {
    case CrisisReason::employment: return "employment";
    case CrisisReason::debt: return "debt";
    case CrisisReason::blowup: return "blowup";
  }
  return "unknown";
}

std::string_view to_string(JumpKind k) {
  return k == JumpKind::down_price ? "down" : "up";
}

std::string_view to_string(PathStatus s) {
  switch (s) {
    case PathStatus::completed: return "completed";
    case PathStatus::crisis: return "crisis";
    case PathStatus::blowup: return "blowup";
  }
  return "unknown";
}

StepPlan plan_step(const EconState& s, const MarketState& mkt, const ModelParams& p) {
  StepPlan plan;
  plan.r = lending_rate(mkt.mu, p);
  plan.derived = econ_derived(s, plan.r, p);
  plan.lams = jump_intensities(plan.derived.f, p);
  return plan;
}

StepNoise draw_step_noise(const RngStream& rng, std::uint64_t step, const JumpIntensities& lams,
                          double dt) {
  StepNoise noise;
  noise.z = rng.gaussian_at(step, 0);
  // Slots 1 and 2 are only read when the intensity is positive; skipping
  // them does not shift any other variate.
  if (lams.lam_up > 0.0 && rng.uniform_at(step, 1) < -std::expm1(-lams.lam_up * dt)) {
    noise.n_up = 1;
  }
  if (lams.lam_down > 0.0 && rng.uniform_at(step, 2) < -std::expm1(-lams.lam_down * dt)) {
    noise.n_down = 1;
  }
  return noise;
}

MarketState advance_market(const MarketState& mkt, const JumpIntensities& lams, double dt,
                           const StepNoise& noise, const ModelParams& p) {
  const double log_crash = std::log1p(-p.j_up);
  const double log_rally = std::log1p(p.j_down);
  const double a = trend_drift_target(lams, p);
  const double compensator = log_crash * lams.lam_up + log_rally * lams.lam_down;
  const double shock = p.sigma * std::sqrt(dt) * noise.z;

  double mu = mkt.mu + (p.eta_mu * (a - mkt.mu) - compensator) * dt + shock;
  double price = mkt.s * std::exp((a - compensator) * dt + shock);
  for (int i = 0; i < noise.n_up; ++i) {
    price *= crash_factor(p);
    mu += log_crash;
  }
  for (int i = 0; i < noise.n_down; ++i) {
    price *= rally_factor(p);
    mu += log_rally;
  }
  return {price, mu};
}

StepOutcome advance(const EconState& s, const MarketState& mkt, const StepPlan& plan, double dt,
                    const StepNoise& noise, const ModelParams& p) {
  StepOutcome out;

  const double r = plan.r;
  const EconState k1 = econ_vector_field_unchecked(s, r, p).d;
  const EconState k2 = econ_vector_field_unchecked(axpy(s, 0.5 * dt, k1), r, p).d;
  const EconState k3 = econ_vector_field_unchecked(axpy(s, 0.5 * dt, k2), r, p).d;
  const EconState k4 = econ_vector_field_unchecked(axpy(s, dt, k3), r, p).d;
  const double w = dt / 6.0;
  out.econ = {s.omega + w * (k1.omega + 2.0 * k2.omega + 2.0 * k3.omega + k4.omega),
              s.e + w * (k1.e + 2.0 * k2.e + 2.0 * k3.e + k4.e),
              s.m + w * (k1.m + 2.0 * k2.m + 2.0 * k3.m + k4.m),
              s.ell + w * (k1.ell + 2.0 * k2.ell + 2.0 * k3.ell + k4.ell)};

  out.market = advance_market(mkt, plan.lams, dt, noise, p);
  out.blowup = first_bad(out.econ, out.market);
  return out;
}

StepResult step(const EconState& s, const MarketState& mkt, double dt, const RngStream& rng,
                const ModelParams& p, double t) {
  const StepPlan plan = plan_step(s, mkt, p);
  const StepNoise noise = draw_step_noise(rng, rng.step(), plan.lams, dt);
  const StepOutcome o = advance(s, mkt, plan, dt, noise, p);

  StepResult res{o.econ, o.market, {}, o.blowup};
  for (int i = 0; i < noise.n_up; ++i) {
    res.jumps.push_back({t + dt, JumpKind::down_price, crash_factor(p)});
  }
  for (int i = 0; i < noise.n_down; ++i) {
    res.jumps.push_back({t + dt, JumpKind::up_price, rally_factor(p)});
  }
  return res;
}

TrajectorySample make_sample(double t, const EconState& s, const MarketState& mkt,
                             const ModelParams& p) {
  TrajectorySample out;
  out.t = t;
  out.econ = s;
  out.market = mkt;
  out.r = lending_rate(mkt.mu, p);
  const EconDerived d = econ_derived(s, out.r, p);
  out.pi = d.pi;
  out.f = d.f;
  out.premium = premium(mkt.mu, p);
  out.s_disc = std::exp(-p.r_l * t) * mkt.s;
  return out;
}

double blowup_debt_limit(const SimConfig& cfg, const ModelParams& p) {
  return 10.0 * apriori_bounds(cfg.init_econ, cfg.t_end, p, p.r_max).debt_cap;
}

Trajectory simulate_path(const SimConfig& cfg, const ModelParams& p, std::uint64_t run_index,
                         const std::optional<CrisisCriterion>& crisis) {
  Trajectory traj;
  const RngStream rng(cfg.seed, run_index);
  const double debt_limit = blowup_debt_limit(cfg, p);
  const auto n_steps = static_cast<std::uint64_t>(std::ceil(cfg.t_end / cfg.dt - 1e-9));
  const auto stride = static_cast<std::uint64_t>(cfg.record_stride);
  traj.samples.reserve(n_steps / stride + 2);

  EconState x = cfg.init_econ;
  MarketState mkt = resolved_init_market(cfg, p);

  // Records the sample and reports whether the crisis predicate fired on it.
  auto record = [&](double t) {
    traj.samples.push_back(make_sample(t, x, mkt, p));
    if (!crisis || t > crisis->horizon + 1e-9) return false;
    if (auto why = crisis_condition(x, *crisis)) {
      traj.status = PathStatus::crisis;
      traj.status_time = t;
      traj.reason = why;
      return true;
    }
    return false;
  };

  if (record(0.0)) return traj;

  for (std::uint64_t k = 0; k < n_steps; ++k) {
    const double t = static_cast<double>(k) * cfg.dt;
    const double t_next = k + 1 == n_steps ? cfg.t_end : static_cast<double>(k + 1) * cfg.dt;
    const double h = t_next - t;

    const StepPlan plan = plan_step(x, mkt, p);
    const StepNoise noise = draw_step_noise(rng, k, plan.lams, h);
    const StepOutcome o = advance(x, mkt, plan, h, noise, p);

    const char* bad = o.blowup;
    if (!bad && std::abs(o.econ.m) + std::abs(o.econ.ell) > debt_limit) bad = "debt_cap";
    if (bad) {
      traj.status = PathStatus::blowup;
      traj.status_time = t_next;
      traj.blowup_what = bad;
      if (crisis && crisis->count_blowup_as_crisis) traj.reason = CrisisReason::blowup;
      return traj;
    }

    x = o.econ;
    mkt = o.market;
    for (int i = 0; i < noise.n_up; ++i) {
      traj.jumps.push_back({t_next, JumpKind::down_price, crash_factor(p)});
    }
    for (int i = 0; i < noise.n_down; ++i) {
      traj.jumps.push_back({t_next, JumpKind::up_price, rally_factor(p)});
    }

    if ((k + 1) % stride == 0 || k + 1 == n_steps) {
      if (record(t_next)) return traj;
    }
  }
  traj.status_time = cfg.t_end;
  return traj;
}

}  // namespace macrofin
