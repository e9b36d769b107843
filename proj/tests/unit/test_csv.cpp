#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "macrofin/csv.hpp"

using namespace macrofin;

namespace {

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

}  // namespace

TEST_CASE("number formatting") {
  CHECK(format_number(0.1) == "0.1");
  CHECK(format_number(150.0) == "150");
  CHECK(format_number(1.0 / 3.0) == "0.333333333333");
  CHECK(format_number(1e-20) == "1e-20");
  CHECK(format_number(std::nan("")) == "nan");
}

TEST_CASE("trajectory and jump files") {
  Trajectory tr;
  tr.samples.push_back(make_sample(0.0, {0.75, 0.9, 0.2, 0.5}, {1.0, 0.02}, ModelParams{}));
  tr.samples.push_back(make_sample(0.1, {0.74, 0.9, 0.21, 0.5}, {1.01, 0.021}, ModelParams{}));
  tr.jumps.push_back({0.05, JumpKind::down_price, 0.9});
  tr.jumps.push_back({0.07, JumpKind::up_price, 1.1});

  std::ostringstream t;
  write_trajectory_csv(t, tr, "seed=0");
  const auto tl = lines(t.str());
  REQUIRE(tl.size() == 4);
  CHECK(tl[0] == "# seed=0");
  CHECK(tl[1] == "t,omega,e,m,ell,pi,f,r,premium,S,S_disc,mu");
  CHECK(tl[2].rfind("0,0.75,0.9,0.2,0.5,", 0) == 0);
  CHECK(std::stod(tl[2].substr(19)) == doctest::Approx(0.129));  // pi at r = r_l + rho_1
  CHECK(std::count(tl[3].begin(), tl[3].end(), ',') == 11);

  std::ostringstream j;
  write_jumps_csv(j, tr, "");
  const auto jl = lines(j.str());
  REQUIRE(jl.size() == 3);
  CHECK(jl[0] == "t,kind,factor");
  CHECK(jl[1] == "0.05,down,0.9");
  CHECK(jl[2] == "0.07,up,1.1");
}

TEST_CASE("sweep file with an error row") {
  McResult ok;
  ok.point = {{"r_l", 0.02}};
  ok.n_runs = 10;
  ok.n_crisis = 1;
  ok.p_hat = 0.1;
  ok.ci_low = 0.01;
  ok.ci_high = 0.4;
  ok.mean_crisis_time = 42.5;
  McResult bad;
  bad.point = {{"r_l", 0.3}};
  bad.mean_crisis_time = std::nan("");
  bad.ci_high = 1.0;
  bad.error = "r_l = 0.3 outside [0, r_max]";

  std::ostringstream s;
  write_sweep_csv(s, "r_l", {ok, bad}, "c");
  const auto l = lines(s.str());
  REQUIRE(l.size() == 5);
  CHECK(l[1] == "param,value,n_runs,n_crisis,p_hat,ci_low,ci_high,n_blowup,mean_crisis_time");
  CHECK(l[2] == "r_l,0.02,10,1,0.1,0.01,0.4,0,42.5");
  CHECK(l[3] == "r_l,0.3,0,0,0,0,1,0,nan");
  CHECK(l[4].rfind("# error at r_l=0.3: ", 0) == 0);
}

TEST_CASE("heatmap file") {
  McGrid g;
  g.p1_name = "eta_mu";
  g.p2_name = "rho_2";
  g.p1_values = {0.5, 1.0};
  g.p2_values = {3.0};
  g.cells.resize(2);
  g.cells[0].n_runs = 300;
  g.cells[0].p_hat = 0.25;
  g.cells[1].n_runs = 300;
  std::ostringstream s;
  write_heatmap_csv(s, g, "");
  const auto l = lines(s.str());
  REQUIRE(l.size() == 3);
  CHECK(l[0] == "p1,p1_value,p2,p2_value,n_runs,p_hat");
  CHECK(l[1] == "eta_mu,0.5,rho_2,3,300,0.25");
  CHECK(l[2] == "eta_mu,1,rho_2,3,300,0");
}
