#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <random>

#include "macrofin/integrator.hpp"

using namespace macrofin;
using doctest::Approx;

namespace {

MarketNoisePath quiet(std::size_t n, double dt, JumpIntensities lam = {}) {
  MarketNoisePath z;
  z.dt = dt;
  z.dw.assign(n, 0.0);
  z.n_up.assign(n, 0);
  z.n_down.assign(n, 0);
  z.lams.assign(n + 1, lam);
  return z;
}

}  // namespace

TEST_CASE("noiseless limit of both closed forms") {
  ModelParams p;
  p.sigma = 0.0;
  const double dt = 0.01;
  const MarketState init{2.0, 0.3};
  const auto path = closed_form_market(quiet(500, dt), init, p);
  for (std::size_t i = 0; i <= 500; i += 50) {
    const double t = static_cast<double>(i) * dt;
    CHECK(path.s[i] == Approx(2.0 * std::exp(p.r_l * t)).epsilon(1e-13));
    CHECK(path.mu[i] == Approx(p.r_l + (0.3 - p.r_l) * std::exp(-p.eta_mu * t)).epsilon(1e-13));
  }
}

TEST_CASE("a single down-price jump with its compensator") {
  ModelParams p;
  p.sigma = 0.0;
  const double dt = 0.01;
  const double lam = 0.4;
  auto z = quiet(200, dt, {lam, 0.0});
  z.n_up[99] = 1;  // acts at t = 1
  const auto path = closed_form_market(z, {1.0, p.r_l}, p);
  for (std::size_t i : {50u, 99u, 100u, 150u, 200u}) {
    const double t = static_cast<double>(i) * dt;
    const double jumps = i >= 100 ? std::log(0.9) : 0.0;
    CHECK(std::log(path.s[i]) == Approx(p.r_l * t + p.j_up * lam * t + jumps).epsilon(1e-12));
  }
  CHECK(path.s[100] / path.s[99] == Approx(0.9 * std::exp((p.r_l + p.j_up * lam) * dt)).epsilon(1e-13));
  CHECK(path.mu[100] - path.mu[99] == Approx(std::log(0.9)).epsilon(0.01));
}

TEST_CASE("Euler log-price step is exact without jumps") {
  ModelParams p;
  p.lambda_up = 0.0;
  p.lambda_down = 0.0;
  const double dt = 0.01;
  const std::size_t n = 1000;
  auto z = quiet(n, dt);
  std::mt19937_64 gen(1);
  std::normal_distribution<double> g;
  MarketState m{1.0, 0.05};
  std::vector<MarketState> euler{m};
  for (std::size_t i = 0; i < n; ++i) {
    StepNoise noise;
    noise.z = g(gen);
    z.dw[i] = std::sqrt(dt) * noise.z;
    m = advance_market(m, {}, dt, noise, p);
    euler.push_back(m);
  }
  const auto exact = closed_form_market(z, euler.front(), p);
  for (std::size_t i = 0; i <= n; i += 100) {
    CHECK(euler[i].s == Approx(exact.s[i]).epsilon(1e-10));
    CHECK(euler[i].mu == Approx(exact.mu[i]).scale(1.0).epsilon(5e-3));
  }
}

TEST_CASE("mismatched inputs are rejected") {
  const ModelParams p;
  auto z = quiet(10, 0.01);
  z.lams.pop_back();
  CHECK_THROWS_AS(closed_form_market(z, {1.0, 0.0}, p), std::invalid_argument);
  z = quiet(10, 0.0);
  CHECK_THROWS_AS(closed_form_market(z, {1.0, 0.0}, p), std::invalid_argument);
  z = quiet(10, 0.01);
  z.n_down.resize(3);
  CHECK_THROWS_AS(closed_form_market(z, {1.0, 0.0}, p), std::invalid_argument);
}
