#pragma once

#include "gnnmpc/graph.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>

namespace gnnmpc {

/// Header `t,u_1..u_{n_u},x_1..x_{n_x}`, one row per state sample. The final
/// row has no applied input and carries `nan` in the u columns.
void write_trajectory_csv(std::ostream& os, const Trajectory& traj);
void write_trajectory_csv(const std::filesystem::path& path, const Trajectory& traj);

Trajectory read_trajectory_csv(std::istream& is, int node_count, int position_dim);
Trajectory read_trajectory_csv(const std::filesystem::path& path, int node_count, int position_dim);

/// Shortest text that parses back to the same double (17 significant digits).
std::string format_double(double v);

}  // namespace gnnmpc
