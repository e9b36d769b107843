#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "macrofin/integrator.hpp"
#include "macrofin/market.hpp"
#include "macrofin/params.hpp"

namespace macrofin {

/// Mean, variance, skewness and (non-excess) kurtosis of a stationary law.
struct StationaryMoments {
  double mean = 0.0;
  double variance = 0.0;
  double skewness = 0.0;
  double kurtosis = 3.0;
};

/// Stationary law of the trend indicator without jumps: Gaussian with mean
/// r_l - sigma^2/2 and variance sigma^2 / (2 eta_mu). Throws
/// std::domain_error when eta_mu <= 0.
StationaryMoments ou_moments(const ModelParams& p);

/// Stationary moments of the trend indicator driven by a constant speculative
/// flow of magnitude f_const > 0. `direction` selects which intensity is
/// active: down_price uses lambda_up and the log-jump ln(1 - j_up), up_price
/// uses lambda_down and ln(1 + j_down).
StationaryMoments jump_ou_moments(JumpKind direction, double f_const, const ModelParams& p);

/// Same stationary law, with every moment taken from the cumulants
/// kappa_n = lam y^n / (n eta_mu) (plus sigma^2 / (2 eta_mu) at n = 2) of
/// the jump-OU characteristic function. Mean and variance coincide with
/// jump_ou_moments; skewness carries the sign of the log-jump y and the
/// excess kurtosis is eta_mu lam y^4 / (sigma^2 + lam y^2)^2.
StationaryMoments jump_ou_cumulant_moments(JumpKind direction, double f_const,
                                           const ModelParams& p);

/// Long-run mean of the lending premium without jumps,
/// rho_1 exp(rho_2 sigma^2 / 2 + rho_2^2 sigma^2 / (4 eta_mu)).
double premium_lognormal_mean(const ModelParams& p);

/// Limits of mu and r in the noiseless case: (r_l, min(r_max, r_l + rho_1)).
std::pair<double, double> deterministic_limits(const ModelParams& p);

/// Sample moments with batch-means standard errors.
struct SampleMoments {
  std::size_t n = 0;
  double mean = 0.0;
  double variance = 0.0;
  double skewness = 0.0;
  double kurtosis = 0.0;
  double mean_se = 0.0;
  double variance_se = 0.0;
  double skewness_se = 0.0;
  double kurtosis_se = 0.0;
};

struct TrendHarnessResult {
  SampleMoments mu;
  SampleMoments premium;
};

/// Single long path of the market block alone with the intensities pinned at
/// `lams` (the economy is not simulated). Samples every step after `burn_in`
/// and splits the record into `n_batches` consecutive batches.
TrendHarnessResult simulate_stationary_trend(const ModelParams& p, const JumpIntensities& lams,
                                             double t_total, double dt, double burn_in,
                                             std::uint64_t seed, std::uint64_t stream = 0,
                                             int n_batches = 50);

/// Runs `n_paths` full coupled paths (no crisis stop) and pools the recorded
/// samples of mu and the premium after `burn_in`. Each path is one batch.
TrendHarnessResult pooled_trend_moments(const ModelParams& p, const SimConfig& cfg,
                                        std::size_t n_paths, double burn_in, unsigned workers);

struct ValidationRow {
  std::string quantity;
  double formula = 0.0;
  double simulated = 0.0;
  double std_error = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct ValidationOptions {
  std::size_t runs = 200;
  double horizon = 200.0;
  double burn_in = 20.0;
  double dt = 0.005;
  std::uint64_t seed = 0;
  unsigned workers = 1;
  double flow_down = 0.0566;  // constant f for the lambda^+ harness
  double flow_up = 0.15;      // constant |f| for the lambda^- harness
};

/// Formula-versus-simulation table:
///  - ou_mean / ou_variance / premium_mean from `runs` coupled paths of
///    `horizon` years with lambda_up = lambda_down = 0 (tolerances 0.002
///    absolute, 10% and 5% relative);
///  - the four stationary moments of each jump harness from one path of
///    runs * horizon years (tolerance 4 batch standard errors), against
///    jump_ou_cumulant_moments.
std::vector<ValidationRow> run_validation(const ModelParams& p, const SimConfig& cfg,
                                          const ValidationOptions& opt);

}  // namespace macrofin
