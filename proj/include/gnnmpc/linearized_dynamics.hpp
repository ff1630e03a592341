#pragma once

#include "gnnmpc/graph.hpp"

#include <Eigen/Core>

#include <vector>

namespace gnnmpc {

/// Affine local model x^i+ = A^ii x^i + sum_j A^ij x^j + B^i u + c^i.
/// `neighbor` is aligned with GraphTopology::in_neighbors(i).
struct NodeLinearization {
  Eigen::MatrixXd self;
  std::vector<Eigen::MatrixXd> neighbor;
  Eigen::MatrixXd input;
  Eigen::VectorXd offset;
};

struct StageLinearization {
  std::vector<NodeLinearization> nodes;
};

struct LinearizedDynamics {
  std::vector<StageLinearization> stages;

  int horizon() const { return static_cast<int>(stages.size()); }
  int node_count() const { return stages.empty() ? 0 : static_cast<int>(stages.front().nodes.size()); }
  int local_state_dim() const { return static_cast<int>(stages.front().nodes.front().self.rows()); }
  int input_dim() const { return static_cast<int>(stages.front().nodes.front().input.cols()); }

  /// Shapes agree with the topology at every stage; all entries finite.
  void validate(const GraphTopology& topo) const;
};

/// Applies one stage of the affine model to a flattened full state.
Eigen::VectorXd apply_stage(const StageLinearization& stage, const GraphTopology& topo,
                            const Eigen::VectorXd& x, const Eigen::VectorXd& u);

}  // namespace gnnmpc
