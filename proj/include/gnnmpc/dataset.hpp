#pragma once

#include "gnnmpc/gnn.hpp"
#include "gnnmpc/graph.hpp"

#include <filesystem>
#include <vector>

namespace gnnmpc {

/// One (x_t, u_t, x_{t+1}) sample with flattened states.
struct Transition {
  int trajectory = 0;
  Eigen::VectorXd state;
  Eigen::VectorXd input;
  Eigen::VectorXd next_state;
};

/// Open-loop transitions sampled every dt, grouped by source trajectory.
/// Whole trajectories are assigned to the training or validation split;
/// normalization statistics come from the training split only.
struct Dataset {
  double dt = 0.0;
  GraphTopology topology;
  int position_dim = 0;
  int input_dim = 0;
  std::vector<Trajectory> trajectories;
  std::vector<bool> is_validation;  // per trajectory
  std::vector<Transition> records;
  Normalization normalization;

  int node_count() const { return topology.node_count(); }
  std::vector<int> indices(bool validation) const;
};

/// Builds records and normalization from trajectories. Roughly the last 10%
/// of trajectories (at least one when there are two or more) form the
/// validation split.
Dataset make_dataset(std::vector<Trajectory> trajectories, const GraphTopology& topo, double dt);

/// Per-feature statistics over the given records. Scales below 1e-9 fall back to one.
Normalization compute_normalization(const std::vector<Transition>& records, const std::vector<int>& indices,
                                    int position_dim, int input_dim);

/// Directory layout: traj_XXXX.csv files plus manifest.json with dt, dims,
/// topology, file list and split assignment.
void write_dataset(const Dataset& dataset, const std::filesystem::path& dir);
Dataset read_dataset(const std::filesystem::path& dir);

}  // namespace gnnmpc
