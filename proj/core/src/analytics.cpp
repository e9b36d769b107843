#include "macrofin/analytics.hpp"

#include <cmath>
#include <stdexcept>

#include <boost/accumulators/accumulators.hpp>
#include <boost/accumulators/statistics/kurtosis.hpp>
#include <boost/accumulators/statistics/mean.hpp>
#include <boost/accumulators/statistics/skewness.hpp>
#include <boost/accumulators/statistics/stats.hpp>
#include <boost/accumulators/statistics/variance.hpp>

#include "macrofin/parallel.hpp"

namespace macrofin {
namespace {

namespace acc = boost::accumulators;
using MomentSet =
    acc::accumulator_set<double, acc::stats<acc::tag::mean, acc::tag::variance,
                                            acc::tag::skewness, acc::tag::kurtosis>>;

double sd_of_mean(const std::vector<double>& xs) {
  if (xs.size() < 2) return 0.0;
  double m = 0.0;
  for (double x : xs) m += x;
  m /= static_cast<double>(xs.size());
  double ss = 0.0;
  for (double x : xs) ss += (x - m) * (x - m);
  return std::sqrt(ss / static_cast<double>(xs.size() - 1) / static_cast<double>(xs.size()));
}

// Global moments plus batch-means standard errors for each of the four.
class BatchedMoments {
 public:
  void start_batch() { batches_.emplace_back(); }
  void add(double x) {
    all_(x);
    batches_.back()(x);
  }

  SampleMoments finish() const {
    SampleMoments out;
    out.n = acc::count(all_);
    if (out.n == 0) return out;
    out.mean = acc::mean(all_);
    out.variance = acc::variance(all_);
    out.skewness = out.variance > 0.0 ? acc::skewness(all_) : 0.0;
    out.kurtosis = out.variance > 0.0 ? acc::kurtosis(all_) + 3.0 : 0.0;

    std::vector<double> means, vars, skews, kurts;
    for (const auto& b : batches_) {
      if (acc::count(b) < 2) continue;
      means.push_back(acc::mean(b));
      vars.push_back(acc::variance(b));
      if (acc::variance(b) > 0.0) {
        skews.push_back(acc::skewness(b));
        kurts.push_back(acc::kurtosis(b) + 3.0);
      }
    }
    out.mean_se = sd_of_mean(means);
    out.variance_se = sd_of_mean(vars);
    out.skewness_se = sd_of_mean(skews);
    out.kurtosis_se = sd_of_mean(kurts);
    return out;
  }

 private:
  MomentSet all_;
  std::vector<MomentSet> batches_;
};

}  // namespace

StationaryMoments ou_moments(const ModelParams& p) {
  if (!(p.eta_mu > 0.0)) throw std::domain_error("ou_moments: eta_mu must be positive");
  return {p.r_l - 0.5 * p.sigma * p.sigma, p.sigma * p.sigma / (2.0 * p.eta_mu), 0.0, 3.0};
}

StationaryMoments jump_ou_moments(JumpKind direction, double f_const, const ModelParams& p) {
  if (!(f_const > 0.0)) throw std::domain_error("jump_ou_moments: f_const must be positive");
  if (!(p.eta_mu > 0.0)) throw std::domain_error("jump_ou_moments: eta_mu must be positive");

  const bool crash = direction == JumpKind::down_price;
  const double log_jump = crash ? std::log1p(-p.j_up) : std::log1p(p.j_down);
  const double rate = (crash ? p.lambda_up : p.lambda_down) * f_const;
  const double s2 = p.sigma * p.sigma;
  const double spread = s2 + rate * log_jump * log_jump;

  StationaryMoments m;
  m.mean = p.r_l - 0.5 * s2 + (crash ? log_jump + p.j_up : log_jump - p.j_down) * rate;
  m.variance = spread / (2.0 * p.eta_mu);
  if (spread > 0.0) {
    m.skewness = -std::pow(2.0, 1.5) * rate * std::pow(log_jump, 3) / (3.0 * std::pow(spread, 1.5));
    m.kurtosis = 3.0 + 4.0 * p.eta_mu * rate * std::pow(log_jump, 4) / (spread * spread);
  }
  return m;
}

StationaryMoments jump_ou_cumulant_moments(JumpKind direction, double f_const,
                                           const ModelParams& p) {
  StationaryMoments m = jump_ou_moments(direction, f_const, p);
  const bool crash = direction == JumpKind::down_price;
  const double y = crash ? std::log1p(-p.j_up) : std::log1p(p.j_down);
  const double rate = (crash ? p.lambda_up : p.lambda_down) * f_const;
  const double k2 = m.variance;
  const double k3 = rate * y * y * y / (3.0 * p.eta_mu);
  const double k4 = rate * y * y * y * y / (4.0 * p.eta_mu);
  if (k2 > 0.0) {
    m.skewness = k3 / std::pow(k2, 1.5);
    m.kurtosis = 3.0 + k4 / (k2 * k2);
  }
  return m;
}

double premium_lognormal_mean(const ModelParams& p) {
  if (!(p.eta_mu > 0.0)) throw std::domain_error("premium_lognormal_mean: eta_mu must be positive");
  const double s2 = p.sigma * p.sigma;
  return p.rho_1 * std::exp(p.rho_2 * s2 / 2.0 + p.rho_2 * p.rho_2 * s2 / (4.0 * p.eta_mu));
}

std::pair<double, double> deterministic_limits(const ModelParams& p) {
  return {p.r_l, std::min(p.r_max, p.r_l + p.rho_1)};
}

TrendHarnessResult simulate_stationary_trend(const ModelParams& p, const JumpIntensities& lams,
                                             double t_total, double dt, double burn_in,
                                             std::uint64_t seed, std::uint64_t stream,
                                             int n_batches) {
  if (!(dt > 0.0) || !(t_total > 0.0) || n_batches < 1) {
    throw std::invalid_argument("simulate_stationary_trend: bad horizon, step or batch count");
  }
  const RngStream rng(seed, stream);
  const auto burn_steps = static_cast<std::uint64_t>(std::ceil(burn_in / dt - 1e-9));
  const auto kept_steps = static_cast<std::uint64_t>(std::ceil(t_total / dt - 1e-9));
  const std::uint64_t batch_len = std::max<std::uint64_t>(1, kept_steps / n_batches);

  BatchedMoments mu_stats;
  BatchedMoments premium_stats;
  MarketState mkt{1.0, p.r_l};
  for (std::uint64_t k = 0; k < burn_steps + kept_steps; ++k) {
    const StepNoise noise = draw_step_noise(rng, k, lams, dt);
    mkt = advance_market(mkt, lams, dt, noise, p);
    // Keep the price near 1; only mu is sampled.
    mkt.s = 1.0;
    if (k < burn_steps) continue;
    const std::uint64_t j = k - burn_steps;
    if (j % batch_len == 0 && j / batch_len < static_cast<std::uint64_t>(n_batches)) {
      mu_stats.start_batch();
      premium_stats.start_batch();
    }
    mu_stats.add(mkt.mu);
    premium_stats.add(premium(mkt.mu, p));
  }
  return {mu_stats.finish(), premium_stats.finish()};
}

TrendHarnessResult pooled_trend_moments(const ModelParams& p, const SimConfig& cfg,
                                        std::size_t n_paths, double burn_in, unsigned workers) {
  std::vector<std::vector<double>> mus(n_paths);
  parallel_for(n_paths, workers, [&](std::size_t i) {
    const Trajectory traj = simulate_path(cfg, p, i, std::nullopt);
    for (const auto& s : traj.samples) {
      if (s.t >= burn_in - 1e-9) mus[i].push_back(s.market.mu);
    }
  });

  BatchedMoments mu_stats;
  BatchedMoments premium_stats;
  for (const auto& path : mus) {
    if (path.empty()) continue;
    mu_stats.start_batch();
    premium_stats.start_batch();
    for (double mu : path) {
      mu_stats.add(mu);
      premium_stats.add(premium(mu, p));
    }
  }
  return {mu_stats.finish(), premium_stats.finish()};
}

std::vector<ValidationRow> run_validation(const ModelParams& p, const SimConfig& cfg,
                                          const ValidationOptions& opt) {
  std::vector<ValidationRow> rows;

  ModelParams no_jumps = p;
  no_jumps.lambda_up = 0.0;
  no_jumps.lambda_down = 0.0;
  SimConfig sim = cfg;
  sim.t_end = opt.horizon;
  sim.dt = opt.dt;
  sim.seed = opt.seed;

  const StationaryMoments ou = ou_moments(no_jumps);
  const auto pooled = pooled_trend_moments(no_jumps, sim, opt.runs, opt.burn_in, opt.workers);
  auto add = [&](std::string name, double formula, double simulated, double se, double tol) {
    rows.push_back({std::move(name), formula, simulated, se, tol,
                    std::abs(simulated - formula) <= tol});
  };
  add("ou_mean", ou.mean, pooled.mu.mean, pooled.mu.mean_se, 0.002);
  add("ou_variance", ou.variance, pooled.mu.variance, pooled.mu.variance_se, 0.1 * ou.variance);
  const double x0 = premium_lognormal_mean(no_jumps);
  add("premium_mean", x0, pooled.premium.mean, pooled.premium.mean_se, 0.05 * x0);

  const double long_run = static_cast<double>(opt.runs) * opt.horizon;
  auto jump_rows = [&](const std::string& tag, JumpKind kind, double flow, std::uint64_t stream) {
    const JumpIntensities lams = kind == JumpKind::down_price
                                     ? JumpIntensities{p.lambda_up * flow, 0.0}
                                     : JumpIntensities{0.0, p.lambda_down * flow};
    const StationaryMoments m = jump_ou_cumulant_moments(kind, flow, p);
    const auto sim_m =
        simulate_stationary_trend(p, lams, long_run, opt.dt, opt.burn_in, opt.seed, stream).mu;
    add(tag + "_mean", m.mean, sim_m.mean, sim_m.mean_se, 4.0 * sim_m.mean_se);
    add(tag + "_variance", m.variance, sim_m.variance, sim_m.variance_se, 4.0 * sim_m.variance_se);
    add(tag + "_skewness", m.skewness, sim_m.skewness, sim_m.skewness_se, 4.0 * sim_m.skewness_se);
    add(tag + "_kurtosis", m.kurtosis, sim_m.kurtosis, sim_m.kurtosis_se, 4.0 * sim_m.kurtosis_se);
  };
  jump_rows("jump_down", JumpKind::down_price, opt.flow_down, 1);
  jump_rows("jump_up", JumpKind::up_price, opt.flow_up, 2);
  return rows;
}

}  // namespace macrofin
