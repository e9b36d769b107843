#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "macrofin/integrator.hpp"
#include "macrofin/montecarlo.hpp"

namespace macrofin {

/// 12 significant digits, shortest of fixed/scientific ("%.12g").
std::string format_number(double v);

/// Each writer emits `# <comment>` first when comment is non-empty.
void write_trajectory_csv(std::ostream& os, const Trajectory& traj, std::string_view comment);
void write_jumps_csv(std::ostream& os, const Trajectory& traj, std::string_view comment);
void write_sweep_csv(std::ostream& os, std::string_view param, const std::vector<McResult>& rows,
                     std::string_view comment);
void write_heatmap_csv(std::ostream& os, const McGrid& grid, std::string_view comment);

}  // namespace macrofin
