#pragma once

#include "macrofin/params.hpp"

namespace macrofin {

// Sign convention, read before touching anything in this header:
//
//   lam_up   = lambda^+ = lambda_up * max(f, 0)   drives DOWNWARD price jumps,
//                                                  S -> (1 - j_up) S
//   lam_down = lambda^- = lambda_down * max(-f, 0) drives UPWARD price jumps,
//                                                  S -> (1 + j_down) S
//
// "up"/"down" name the superscript of lambda, not the price move. Speculative
// inflows (f > 0) therefore raise crash risk.

struct JumpIntensities {
  double lam_up = 0.0;
  double lam_down = 0.0;
};

JumpIntensities jump_intensities(double f, const ModelParams& p);

/// Multiplicative price factor of a lambda^+ event, 1 - j_up.
inline double crash_factor(const ModelParams& p) { return 1.0 - p.j_up; }
/// Multiplicative price factor of a lambda^- event, 1 + j_down.
inline double rally_factor(const ModelParams& p) { return 1.0 + p.j_down; }

/// Predictable drift target a of the trend indicator:
/// r_l - sigma^2/2 + (ln(1-J+) + J+) lam_up + (ln(1+J-) - J-) lam_down.
double trend_drift_target(const JumpIntensities& lams, const ModelParams& p);

/// Drift of d ln S in its compensated form. Equal to trend_drift_target.
double log_price_increment_drift(const JumpIntensities& lams, const ModelParams& p);

/// Drift of d ln S with the jump compensators folded in:
/// r_l - sigma^2/2 + J+ lam_up - J- lam_down.
double log_price_raw_drift(const JumpIntensities& lams, const ModelParams& p);

/// rho_1 exp(-rho_2 (mu - r_l)); exactly zero when rho_1 == 0.
double premium(double mu, const ModelParams& p);

/// min(r_max, r_l + premium(mu)).
double lending_rate(double mu, const ModelParams& p);

}  // namespace macrofin
