#include <cmath>
#include <stdexcept>

#include "macrofin/integrator.hpp"

namespace macrofin {

MarketPath closed_form_market(const MarketNoisePath& noise, const MarketState& init,
                              const ModelParams& p) {
  const std::size_t n = noise.dw.size();
  if (noise.n_up.size() != n || noise.n_down.size() != n || noise.lams.size() != n + 1) {
    throw std::invalid_argument("closed_form_market: noise and intensity paths disagree in length");
  }
  if (!(noise.dt > 0.0)) throw std::invalid_argument("closed_form_market: dt must be positive");
  if (!(p.eta_mu > 0.0)) throw std::invalid_argument("closed_form_market: eta_mu must be positive");

  const double h = noise.dt;
  const double eta = p.eta_mu;
  const double log_crash = std::log1p(-p.j_up);
  const double log_rally = std::log1p(p.j_down);
  const double base_drift = p.r_l - 0.5 * p.sigma * p.sigma;

  // Compensator integrand of the price, J+ lam+ - J- lam-.
  auto price_comp = [&](const JumpIntensities& l) {
    return p.j_up * l.lam_up - p.j_down * l.lam_down;
  };
  // Deterministic forcing of mu: eta a(t) minus the jump compensators.
  auto mu_forcing = [&](const JumpIntensities& l) {
    return eta * trend_drift_target(l, p) - (log_crash * l.lam_up + log_rally * l.lam_down);
  };

  // Exact integrals of exp(-eta (h - u)) against 1 and u / h over [0, h].
  const double decay = std::exp(-eta * h);
  const double c_flat = -std::expm1(-eta * h) / eta;
  const double c_ramp = (1.0 - c_flat / h) / eta;
  const double brownian_weight = std::exp(-0.5 * eta * h);

  MarketPath out;
  out.s.resize(n + 1);
  out.mu.resize(n + 1);
  out.s[0] = init.s;
  out.mu[0] = init.mu;

  const double log_s0 = std::log(init.s);
  double brownian = 0.0;
  double comp_integral = 0.0;
  long long crashes = 0;
  long long rallies = 0;
  double mu = init.mu;

  for (std::size_t i = 0; i < n; ++i) {
    const double t = static_cast<double>(i + 1) * h;
    brownian += noise.dw[i];
    comp_integral += 0.5 * h * (price_comp(noise.lams[i]) + price_comp(noise.lams[i + 1]));
    crashes += noise.n_up[i];
    rallies += noise.n_down[i];
    out.s[i + 1] = std::exp(log_s0 + base_drift * t + p.sigma * brownian + comp_integral +
                            static_cast<double>(crashes) * log_crash +
                            static_cast<double>(rallies) * log_rally);

    const double q0 = mu_forcing(noise.lams[i]);
    const double q1 = mu_forcing(noise.lams[i + 1]);
    mu = decay * mu + q0 * c_flat + (q1 - q0) * c_ramp + brownian_weight * p.sigma * noise.dw[i] +
         noise.n_up[i] * log_crash + noise.n_down[i] * log_rally;
    out.mu[i + 1] = mu;
  }
  return out;
}

}  // namespace macrofin
