#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace macrofin {

/// Real-economy state: wage share, employment rate, firm deposit ratio and
/// loan ratio. The two ratios m and ell are measured in years of output.
struct EconState {
  double omega = 0.0;
  double e = 0.0;
  double m = 0.0;
  double ell = 0.0;

  friend bool operator==(const EconState&, const EconState&) = default;
};

/// Asset price and trend indicator of log-returns.
struct MarketState {
  double s = 1.0;
  double mu = 0.0;

  friend bool operator==(const MarketState&, const MarketState&) = default;
};

/// Full set of model constants. Rates are per year; the ratios nu and psi_1
/// carry units of years.
///
/// Naming of the jump constants follows the intensity superscript, not the
/// direction of the price move: `j_up` / `lambda_up` belong to lambda^+, which
/// drives *downward* price jumps S -> (1 - j_up) S, while `j_down` /
/// `lambda_down` belong to lambda^-, which drives *upward* jumps
/// S -> (1 + j_down) S.
struct ModelParams {
  double nu = 2.7;
  double delta = 0.04;
  double r_m = 0.01;

  double kappa_min = 0.0;
  double kappa_max = 0.3;
  double kappa_0 = 0.0318;
  double kappa_1 = 0.575;

  double delta_min = 0.0;
  double delta_max = 0.3;
  double delta_0 = -0.078;
  double delta_1 = 0.553;

  double zeta = 0.8;
  double kappa_l = 0.02;

  double psi_min = -0.15;
  double psi_max = 0.3;
  double psi_0 = -0.075;
  double psi_1 = 3.75;

  double alpha = 0.02;
  double beta = 0.02;
  double gamma = 0.9;
  double eta_p = 0.192;
  double xi = 1.875;
  double phi_0 = -0.292;
  double phi_1 = 0.469;

  double r_l = 0.02;
  double sigma = 0.1;
  double j_up = 0.1;
  double j_down = 0.1;
  double lambda_up = 1.0;
  double lambda_down = 1.0;
  double eta_mu = 0.5;
  double r_max = 0.2;
  double rho_1 = 0.01;
  double rho_2 = 5.0;

  friend bool operator==(const ModelParams&, const ModelParams&) = default;
};

/// Simulation controls. `mu0_follows_r_l` keeps the default initial trend
/// tied to the baseline funding rate until mu0 is set explicitly.
struct SimConfig {
  double t_end = 150.0;
  double dt = 0.005;
  std::uint64_t seed = 0;
  EconState init_econ{0.75, 0.9, 0.2, 0.5};
  MarketState init_market{1.0, 0.02};
  int record_stride = 20;
  bool mu0_follows_r_l = true;

  friend bool operator==(const SimConfig&, const SimConfig&) = default;
};

/// One out-of-range field.
struct Violation {
  std::string field;
  double value = 0.0;
  std::string allowed;
};

/// Descriptor for one scalar field of ModelParams and its admissible
/// interval. Infinite bounds are always open.
struct ParamField {
  std::string_view name;
  double ModelParams::*member;
  double lo;
  double hi;
  bool lo_open;
  bool hi_open;

  bool contains(double v) const;
  std::string range_text() const;
};

ModelParams default_params();
SimConfig default_sim_config();

/// All 34 fields in declaration order.
std::span<const ParamField> param_fields();
const ParamField* find_param_field(std::string_view name);

std::vector<Violation> validate(const ModelParams& p);
std::vector<Violation> validate(const SimConfig& cfg);

/// Initial market state with mu0 resolved against p when it tracks r_l.
MarketState resolved_init_market(const SimConfig& cfg, const ModelParams& p);

std::string describe(const Violation& v);

}  // namespace macrofin
