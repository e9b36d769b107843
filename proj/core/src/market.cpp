#include "macrofin/market.hpp"

#include <algorithm>
#include <cmath>

namespace macrofin {

JumpIntensities jump_intensities(double f, const ModelParams& p) {
  return {p.lambda_up * std::max(f, 0.0), p.lambda_down * std::max(-f, 0.0)};
}

double trend_drift_target(const JumpIntensities& lams, const ModelParams& p) {
  return p.r_l - 0.5 * p.sigma * p.sigma + (std::log1p(-p.j_up) + p.j_up) * lams.lam_up +
         (std::log1p(p.j_down) - p.j_down) * lams.lam_down;
}

double log_price_increment_drift(const JumpIntensities& lams, const ModelParams& p) {
  return trend_drift_target(lams, p);
}

double log_price_raw_drift(const JumpIntensities& lams, const ModelParams& p) {
  return p.r_l - 0.5 * p.sigma * p.sigma + p.j_up * lams.lam_up - p.j_down * lams.lam_down;
}

double premium(double mu, const ModelParams& p) {
  if (p.rho_1 == 0.0) return 0.0;
  return p.rho_1 * std::exp(-p.rho_2 * (mu - p.r_l));
}

double lending_rate(double mu, const ModelParams& p) {
  return std::min(p.r_max, p.r_l + premium(mu, p));
}

}  // namespace macrofin
