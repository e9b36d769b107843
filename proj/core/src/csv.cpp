#include "macrofin/csv.hpp"

#include <cmath>

#include <fmt/format.h>

namespace macrofin {
namespace {

void comment_line(std::ostream& os, std::string_view comment) {
  if (!comment.empty()) os << "# " << comment << '\n';
}

}  // namespace

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  return fmt::format("{:.12g}", v);
}

void write_trajectory_csv(std::ostream& os, const Trajectory& traj, std::string_view comment) {
  comment_line(os, comment);
  os << "t,omega,e,m,ell,pi,f,r,premium,S,S_disc,mu\n";
  for (const auto& s : traj.samples) {
    os << format_number(s.t) << ',' << format_number(s.econ.omega) << ','
       << format_number(s.econ.e) << ',' << format_number(s.econ.m) << ','
       << format_number(s.econ.ell) << ',' << format_number(s.pi) << ',' << format_number(s.f)
       << ',' << format_number(s.r) << ',' << format_number(s.premium) << ','
       << format_number(s.market.s) << ',' << format_number(s.s_disc) << ','
       << format_number(s.market.mu) << '\n';
  }
}

void write_jumps_csv(std::ostream& os, const Trajectory& traj, std::string_view comment) {
  comment_line(os, comment);
  os << "t,kind,factor\n";
  for (const auto& j : traj.jumps) {
    os << format_number(j.t) << ',' << to_string(j.kind) << ',' << format_number(j.factor) << '\n';
  }
}

void write_sweep_csv(std::ostream& os, std::string_view param, const std::vector<McResult>& rows,
                     std::string_view comment) {
  comment_line(os, comment);
  os << "param,value,n_runs,n_crisis,p_hat,ci_low,ci_high,n_blowup,mean_crisis_time\n";
  for (const auto& r : rows) {
    const double value = r.point.empty() ? std::nan("") : r.point.front().second;
    os << param << ',' << format_number(value) << ',' << r.n_runs << ',' << r.n_crisis << ','
       << format_number(r.p_hat) << ',' << format_number(r.ci_low) << ','
       << format_number(r.ci_high) << ',' << r.n_blowup << ','
       << format_number(r.mean_crisis_time) << '\n';
    if (r.error) os << "# error at " << param << '=' << format_number(value) << ": " << *r.error << '\n';
  }
}

void write_heatmap_csv(std::ostream& os, const McGrid& grid, std::string_view comment) {
  comment_line(os, comment);
  os << "p1,p1_value,p2,p2_value,n_runs,p_hat\n";
  for (std::size_t i = 0; i < grid.p1_values.size(); ++i) {
    for (std::size_t j = 0; j < grid.p2_values.size(); ++j) {
      const auto& cell = grid.at(i, j);
      os << grid.p1_name << ',' << format_number(grid.p1_values[i]) << ',' << grid.p2_name << ','
         << format_number(grid.p2_values[j]) << ',' << cell.n_runs << ','
         << format_number(cell.p_hat) << '\n';
      if (cell.error) {
        os << "# error at " << grid.p1_name << '=' << format_number(grid.p1_values[i]) << ' '
           << grid.p2_name << '=' << format_number(grid.p2_values[j]) << ": " << *cell.error
           << '\n';
      }
    }
  }
}

}  // namespace macrofin
