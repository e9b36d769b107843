#include "macrofin/econ.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace macrofin {

double investment(double pi, const ModelParams& p) {
  return clamped_affine(pi, p.kappa_min, p.kappa_max, p.kappa_0, p.kappa_1);
}

double dividend(double pi, const ModelParams& p) {
  return clamped_affine(pi, p.delta_min, p.delta_max, p.delta_0, p.delta_1);
}

double speculative_flow(double nominal_growth, const ModelParams& p) {
  return clamped_affine(nominal_growth, p.psi_min, p.psi_max, p.psi_0, p.psi_1);
}

double phillips(double e, const ModelParams& p) { return p.phi_0 + p.phi_1 * e; }

double profit_ratio(const EconState& s, double r, const ModelParams& p) {
  return 1.0 - s.omega - p.delta * p.nu + p.r_m * s.m - r * s.ell;
}

double inflation(double omega, const ModelParams& p) { return p.eta_p * (p.xi * omega - 1.0); }

double growth_rate(double kappa, const ModelParams& p) { return kappa / p.nu - p.delta; }

EconDerived econ_derived(const EconState& s, double r, const ModelParams& p) {
  EconDerived d;
  d.pi = profit_ratio(s, r, p);
  d.kappa = investment(d.pi, p);
  d.divid = dividend(d.pi, p);
  d.g = growth_rate(d.kappa, p);
  d.infl = inflation(s.omega, p);
  d.f = speculative_flow(d.g + d.infl, p);
  d.phillips = phillips(s.e, p);
  return d;
}

EconRates econ_vector_field_unchecked(const EconState& s, double r, const ModelParams& p) {
  const EconDerived d = econ_derived(s, r, p);
  const double nominal = d.g + d.infl;
  const double carry = (r - p.kappa_l) * s.ell;

  EconRates out;
  out.derived = d;
  out.d.omega = s.omega * (d.phillips - p.alpha - (1.0 - p.gamma) * d.infl);
  out.d.e = s.e * (d.g - p.alpha - p.beta);
  out.d.m = d.pi - (1.0 - p.zeta) * p.nu * d.g + carry - d.divid + d.f - nominal * s.m;
  out.d.ell = p.zeta * (d.kappa - p.delta * p.nu) + carry + d.f - nominal * s.ell;
  return out;
}

EconRates econ_vector_field(const EconState& s, double r, const ModelParams& p) {
  auto check = [](double v, const char* name) {
    if (!std::isfinite(v)) {
      throw std::domain_error(std::string("econ_vector_field: non-finite ") + name);
    }
  };
  check(s.omega, "omega");
  check(s.e, "e");
  check(s.m, "m");
  check(s.ell, "ell");
  check(r, "r");
  return econ_vector_field_unchecked(s, r, p);
}

AprioriBounds apriori_bounds(const EconState& x0, double horizon, const ModelParams& p,
                             double r_cap) {
  if (!(r_cap >= 0.0)) throw std::invalid_argument("apriori_bounds: r_cap must be >= 0");
  if (!(x0.omega > 0.0 && x0.e > 0.0)) {
    throw std::invalid_argument("apriori_bounds: omega0 and e0 must be positive");
  }
  if (!(horizon >= 0.0)) throw std::invalid_argument("apriori_bounds: horizon must be >= 0");

  AprioriBounds b;
  const double T = horizon;
  b.horizon = T;
  b.kappa_abs = std::max(std::abs(p.kappa_min), p.kappa_max);
  b.delta_abs = std::max(std::abs(p.delta_min), p.delta_max);
  b.psi_abs = std::max(std::abs(p.psi_min), p.psi_max);

  b.g_max = b.kappa_abs / p.nu - p.delta;
  b.g_abs = std::abs(b.kappa_abs / p.nu - p.delta);

  const double e_rate = b.g_max - p.alpha - p.beta;
  b.log_e_cap = std::log(x0.e) + e_rate * T;
  b.e_cap = x0.e * std::exp(e_rate * T);
  b.phi_cap = std::abs(p.phi_0) + std::abs(p.phi_1) * b.e_cap;
  const double omega_rate = b.phi_cap - p.alpha + (1.0 - p.gamma) * p.eta_p;
  b.log_omega_cap = std::log(x0.omega) + omega_rate * T;
  b.omega_cap = x0.omega * std::exp(omega_rate * T);
  b.infl_cap = p.eta_p * (p.xi * b.omega_cap + 1.0);
  b.h_cap = b.g_abs + b.infl_cap;
  b.r_l_cap = r_cap + std::abs(p.kappa_l);

  const double dnu = p.delta * p.nu;
  b.a_m = std::abs(1.0 - dnu) + b.omega_cap + (1.0 - p.zeta) * (b.kappa_abs + dnu) +
          b.delta_abs + b.psi_abs;
  b.b_m = std::max(p.r_m + b.h_cap, r_cap + b.r_l_cap);
  b.a_l = p.zeta * (b.kappa_abs + dnu) + b.psi_abs;
  b.b_l = b.r_l_cap + b.h_cap;
  b.a_total = b.a_m + b.a_l;
  b.b_total = b.b_m + b.b_l;

  const double u0 = std::abs(x0.m) + std::abs(x0.ell);
  if (T == 0.0) {
    b.debt_cap = u0;
  } else if (b.b_total == 0.0) {
    b.debt_cap = u0 + b.a_total * T;
  } else {
    const double growth = std::exp(b.b_total * T);
    b.debt_cap = std::isinf(growth) ? std::numeric_limits<double>::infinity()
                                    : u0 * growth + b.a_total / b.b_total * std::expm1(b.b_total * T);
  }
  return b;
}

}  // namespace macrofin
