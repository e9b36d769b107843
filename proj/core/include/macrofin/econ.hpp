#pragma once

#include "macrofin/params.hpp"

namespace macrofin {

/// Quantities derived from the real-economy state at a given lending rate.
struct EconDerived {
  double pi = 0.0;        // profit ratio before dividends
  double kappa = 0.0;     // investment share of output
  double divid = 0.0;     // dividend share
  double f = 0.0;         // speculative flow over nominal output
  double g = 0.0;         // real growth rate, 1/years
  double infl = 0.0;      // inflation rate, 1/years
  double phillips = 0.0;  // wage-bargaining term, 1/years
};

/// Time derivative of the four-dimensional state together with the
/// quantities it was built from.
struct EconRates {
  EconState d;
  EconDerived derived;
};

/// min(hi, max(lo, c0 + c1 x)). Shared shape of the investment, dividend and
/// speculative-flow functions.
constexpr double clamped_affine(double x, double lo, double hi, double c0, double c1) {
  const double y = c0 + c1 * x;
  return y < lo ? lo : (y > hi ? hi : y);
}

double investment(double pi, const ModelParams& p);
double dividend(double pi, const ModelParams& p);
double speculative_flow(double nominal_growth, const ModelParams& p);
double phillips(double e, const ModelParams& p);

double profit_ratio(const EconState& s, double r, const ModelParams& p);
double inflation(double omega, const ModelParams& p);
double growth_rate(double kappa, const ModelParams& p);

EconDerived econ_derived(const EconState& s, double r, const ModelParams& p);

/// Right-hand side of the Keen system with speculative flow at lending rate r.
/// Throws std::domain_error naming the first non-finite input component.
EconRates econ_vector_field(const EconState& s, double r, const ModelParams& p);

/// Same as econ_vector_field without input checks; used inside integrators
/// that classify non-finite states themselves.
EconRates econ_vector_field_unchecked(const EconState& s, double r, const ModelParams& p);

/// Gronwall-type caps on the real-economy block over [0, horizon] for any rate
/// path in [0, r_cap].
///
/// The caps grow doubly exponentially in the horizon; with base parameters
/// omega_cap and everything downstream of it exceed the double range well
/// before 150 years and saturate to +inf, which keeps them valid upper
/// bounds. The `log_*` members carry the same quantities in log space and
/// stay finite for longer.
struct AprioriBounds {
  double horizon = 0.0;
  double kappa_abs = 0.0;
  double delta_abs = 0.0;
  double psi_abs = 0.0;
  double g_max = 0.0;
  double g_abs = 0.0;
  double e_cap = 0.0;      // E_T
  double phi_cap = 0.0;    // Phi_T
  double omega_cap = 0.0;  // Omega_T
  double infl_cap = 0.0;   // I_T
  double h_cap = 0.0;      // H_T
  double r_l_cap = 0.0;    // R_L
  double a_m = 0.0;
  double b_m = 0.0;
  double a_l = 0.0;
  double b_l = 0.0;
  double a_total = 0.0;
  double b_total = 0.0;
  double debt_cap = 0.0;  // bound on |m| + |ell| at the horizon

  double log_e_cap = 0.0;
  double log_omega_cap = 0.0;
};

AprioriBounds apriori_bounds(const EconState& x0, double horizon, const ModelParams& p,
                             double r_cap);

}  // namespace macrofin
