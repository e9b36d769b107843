#include "macrofin/params.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include <fmt/format.h>

namespace macrofin {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// clang-format off
const std::array<ParamField, 34> kFields{{
    {"nu",          &ModelParams::nu,          0.0,  kInf, true,  true},
    {"delta",       &ModelParams::delta,       0.0,  kInf, false, true},
    {"r_m",         &ModelParams::r_m,         0.0,  kInf, false, true},
    {"kappa_min",   &ModelParams::kappa_min,  -1.0,  0.0,  false, false},
    {"kappa_max",   &ModelParams::kappa_max,   0.0,  1.0,  false, false},
    {"kappa_0",     &ModelParams::kappa_0,    -kInf, kInf, true,  true},
    {"kappa_1",     &ModelParams::kappa_1,    -kInf, kInf, true,  true},
    {"delta_min",   &ModelParams::delta_min,  -1.0,  0.0,  false, false},
    {"delta_max",   &ModelParams::delta_max,   0.0,  1.0,  false, false},
    {"delta_0",     &ModelParams::delta_0,    -kInf, kInf, true,  true},
    {"delta_1",     &ModelParams::delta_1,     0.0,  kInf, false, true},
    {"zeta",        &ModelParams::zeta,        0.0,  1.0,  false, false},
    {"kappa_l",     &ModelParams::kappa_l,     0.0,  1.0,  false, false},
    {"psi_min",     &ModelParams::psi_min,    -1.0,  0.0,  false, false},
    {"psi_max",     &ModelParams::psi_max,     0.0,  1.0,  false, false},
    {"psi_0",       &ModelParams::psi_0,      -kInf, kInf, true,  true},
    {"psi_1",       &ModelParams::psi_1,       0.0,  kInf, false, true},
    {"alpha",       &ModelParams::alpha,      -kInf, kInf, true,  true},
    {"beta",        &ModelParams::beta,       -kInf, kInf, true,  true},
    {"gamma",       &ModelParams::gamma,       0.0,  1.0,  false, false},
    {"eta_p",       &ModelParams::eta_p,       0.0,  kInf, true,  true},
    {"xi",          &ModelParams::xi,          1.0,  kInf, false, true},
    {"phi_0",       &ModelParams::phi_0,      -kInf, kInf, true,  true},
    {"phi_1",       &ModelParams::phi_1,      -kInf, kInf, true,  true},
    {"r_l",         &ModelParams::r_l,         0.0,  kInf, false, true},
    {"sigma",       &ModelParams::sigma,       0.0,  kInf, false, true},
    {"j_up",        &ModelParams::j_up,        0.0,  1.0,  true,  true},
    {"j_down",      &ModelParams::j_down,      0.0,  1.0,  true,  false},
    {"lambda_up",   &ModelParams::lambda_up,   0.0,  kInf, false, true},
    {"lambda_down", &ModelParams::lambda_down, 0.0,  kInf, false, true},
    {"eta_mu",      &ModelParams::eta_mu,      0.0,  kInf, true,  true},
    {"r_max",       &ModelParams::r_max,       0.0,  kInf, false, true},
    {"rho_1",       &ModelParams::rho_1,       0.0,  kInf, false, true},
    {"rho_2",       &ModelParams::rho_2,       0.0,  kInf, false, true},
}};
// clang-format on

std::string bound_text(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return fmt::format("{}", v);
}

}  // namespace

bool ParamField::contains(double v) const {
  if (!std::isfinite(v)) return false;
  const bool above = lo_open ? v > lo : v >= lo;
  const bool below = hi_open ? v < hi : v <= hi;
  return above && below;
}

std::string ParamField::range_text() const {
  return fmt::format("{}{}, {}{}", lo_open ? '(' : '[', bound_text(lo), bound_text(hi),
                     hi_open ? ')' : ']');
}

ModelParams default_params() { return ModelParams{}; }

SimConfig default_sim_config() { return SimConfig{}; }

std::span<const ParamField> param_fields() { return kFields; }

const ParamField* find_param_field(std::string_view name) {
  auto it = std::find_if(kFields.begin(), kFields.end(),
                         [&](const ParamField& f) { return f.name == name; });
  return it == kFields.end() ? nullptr : &*it;
}

std::vector<Violation> validate(const ModelParams& p) {
  std::vector<Violation> out;
  for (const auto& f : kFields) {
    const double v = p.*f.member;
    if (!f.contains(v)) out.push_back({std::string(f.name), v, f.range_text()});
  }

  auto ordered = [&](std::string_view lo_name, double lo, std::string_view hi_name, double hi) {
    if (std::isfinite(lo) && std::isfinite(hi) && lo > hi) {
      out.push_back({std::string(lo_name), lo, fmt::format("<= {} ({})", hi_name, hi)});
    }
  };
  ordered("kappa_min", p.kappa_min, "kappa_max", p.kappa_max);
  ordered("delta_min", p.delta_min, "delta_max", p.delta_max);
  ordered("psi_min", p.psi_min, "psi_max", p.psi_max);
  ordered("r_l", p.r_l, "r_max", p.r_max);
  return out;
}

std::vector<Violation> validate(const SimConfig& cfg) {
  std::vector<Violation> out;
  if (!(std::isfinite(cfg.t_end) && cfg.t_end > 0.0)) {
    out.push_back({"t_end", cfg.t_end, "(0, inf)"});
  }
  if (!(std::isfinite(cfg.dt) && cfg.dt > 0.0 && cfg.dt <= cfg.t_end)) {
    out.push_back({"dt", cfg.dt, "(0, t_end]"});
  }
  if (cfg.record_stride < 1) {
    out.push_back({"record_stride", static_cast<double>(cfg.record_stride), "[1, inf)"});
  }
  const auto& x = cfg.init_econ;
  if (!(std::isfinite(x.omega) && x.omega > 0.0)) out.push_back({"omega0", x.omega, "(0, inf)"});
  if (!(std::isfinite(x.e) && x.e > 0.0)) out.push_back({"e0", x.e, "(0, inf)"});
  if (!std::isfinite(x.m)) out.push_back({"m0", x.m, "(-inf, inf)"});
  if (!std::isfinite(x.ell)) out.push_back({"ell0", x.ell, "(-inf, inf)"});
  const auto& mk = cfg.init_market;
  if (!(std::isfinite(mk.s) && mk.s > 0.0)) out.push_back({"s0", mk.s, "(0, inf)"});
  if (!cfg.mu0_follows_r_l && !std::isfinite(mk.mu)) {
    out.push_back({"mu0", mk.mu, "(-inf, inf)"});
  }
  return out;
}

MarketState resolved_init_market(const SimConfig& cfg, const ModelParams& p) {
  MarketState m = cfg.init_market;
  if (cfg.mu0_follows_r_l) m.mu = p.r_l;
  return m;
}

std::string describe(const Violation& v) {
  return fmt::format("{} = {} outside {}", v.field, v.value, v.allowed);
}

}  // namespace macrofin
