#include <doctest.h>

#include <random>
#include <string>

#include "macrofin/config.hpp"

using namespace macrofin;

TEST_CASE("empty document gives defaults") {
  const auto c = load_config("");
  CHECK(c.params == default_params());
  CHECK(c.sim == default_sim_config());
}

TEST_CASE("single override") {
  const auto c = load_config("sigma = 0.25\n");
  ModelParams expected;
  expected.sigma = 0.25;
  CHECK(c.params == expected);
}

TEST_CASE("comments, blank lines and simulation keys") {
  const auto c = load_config(
      "# base run\n"
      "\n"
      "r_l = 0.05   # trailing comment\n"
      "seed=42\n"
      "t_end = 20\n"
      "omega0 = 0.7\n");
  CHECK(c.params.r_l == 0.05);
  CHECK(c.sim.seed == 42);
  CHECK(c.sim.t_end == 20.0);
  CHECK(c.sim.init_econ.omega == 0.7);
  CHECK(resolved_init_market(c.sim, c.params).mu == 0.05);
}

TEST_CASE("typo is an unknown key") {
  try {
    load_config("sgima = 0.2\n");
    FAIL("no exception");
  } catch (const ConfigError& e) {
    CHECK(e.kind() == ConfigError::Kind::unknown_key);
    CHECK(e.key() == "sgima");
    CHECK(std::string(e.what()).find("sgima") != std::string::npos);
    CHECK(e.line() == 1);
  }
}

TEST_CASE("malformed lines") {
  CHECK_THROWS_AS(load_config("sigma 0.2\n"), ConfigError);
  CHECK_THROWS_AS(load_config("sigma = abc\n"), ConfigError);
  CHECK_THROWS_AS(load_config("sigma = 0.1\nsigma = 0.2\n"), ConfigError);
  CHECK_THROWS_AS(load_config("seed = -1\n"), ConfigError);
  try {
    load_config("r_l = 0.02\n\nsigma = \n");
    FAIL("no exception");
  } catch (const ConfigError& e) {
    CHECK(e.kind() == ConfigError::Kind::parse);
    CHECK(e.line() == 3);
  }
}

TEST_CASE("range violations are aggregated") {
  try {
    load_config("j_up = 1\nnu = -2\n");
    FAIL("no exception");
  } catch (const ConfigError& e) {
    CHECK(e.kind() == ConfigError::Kind::validation);
    CHECK(e.violations().size() == 2);
  }
}

TEST_CASE("explicit mu0 detaches from r_l") {
  const auto c = load_config("mu0 = 0.01\nr_l = 0.1\n");
  CHECK_FALSE(c.sim.mu0_follows_r_l);
  CHECK(resolved_init_market(c.sim, c.params).mu == 0.01);
}

TEST_CASE("settings compose left to right") {
  LoadedConfig c{default_params(), default_sim_config()};
  apply_setting(c, "sigma", "0.2");
  apply_setting(c, "sigma", "0.3");
  CHECK(c.params.sigma == 0.3);
  const auto [k, v] = split_assignment("rho_2=7");
  CHECK(k == "rho_2");
  CHECK(v == "7");
  CHECK_THROWS_AS(split_assignment("rho_2"), ConfigError);
}

TEST_CASE("serialize round-trips random admissible configurations") {
  std::mt19937_64 gen(7);
  for (int trial = 0; trial < 200; ++trial) {
    LoadedConfig c{default_params(), default_sim_config()};
    for (const auto& f : param_fields()) {
      const double base = c.params.*f.member;
      std::uniform_real_distribution<double> jitter(0.9, 1.1);
      const double v = base * jitter(gen);
      if (f.contains(v)) c.params.*f.member = v;
    }
    if (!validate(c.params).empty()) c.params = default_params();
    c.sim.seed = gen();
    c.sim.dt = 0.001 + 0.01 * std::uniform_real_distribution<double>(0, 1)(gen);
    if (trial % 2) {
      c.sim.mu0_follows_r_l = false;
      c.sim.init_market.mu = std::uniform_real_distribution<double>(-0.1, 0.1)(gen);
    }
    const auto back = load_config(serialize(c));
    CHECK(back.params == c.params);
    CHECK(back.sim.seed == c.sim.seed);
    CHECK(back.sim.dt == c.sim.dt);
    CHECK(back.sim.mu0_follows_r_l == c.sim.mu0_follows_r_l);
    CHECK(resolved_init_market(back.sim, back.params) == resolved_init_market(c.sim, c.params));
  }
}

TEST_CASE("inline description carries the seed and every parameter") {
  LoadedConfig c{default_params(), default_sim_config()};
  c.sim.seed = 99;
  const std::string d = describe_inline(c);
  CHECK(d.find("seed=99") != std::string::npos);
  CHECK(d.find('\n') == std::string::npos);
  for (const auto& f : param_fields()) {
    CHECK(d.find(std::string(f.name) + "=") != std::string::npos);
  }
}
