#pragma once

#include "gnnmpc/gnn.hpp"
#include "gnnmpc/graph.hpp"
#include "gnnmpc/linearized_dynamics.hpp"
#include "gnnmpc/trunk_sim.hpp"

#include <Eigen/Core>

#include <vector>

namespace gnnmpc {

/// Discrete-time model x+ = f(x, u) with node-local structure on a topology.
/// This is what the MPC loop linearizes along its trajectory.
class LocalDynamics {
 public:
  virtual ~LocalDynamics() = default;

  virtual const GraphTopology& topology() const = 0;
  virtual int local_state_dim() const = 0;
  virtual int input_dim() const = 0;
  virtual Eigen::VectorXd step(const Eigen::VectorXd& x, const Eigen::VectorXd& u) const = 0;
  virtual StageLinearization linearize(const Eigen::VectorXd& x, const Eigen::VectorXd& u) const = 0;

  /// Stage k uses (x_hat[k], u_hat[k]); x_hat may carry one extra terminal entry.
  virtual LinearizedDynamics linearize_trajectory(const std::vector<Eigen::VectorXd>& x_hat,
                                                  const std::vector<Eigen::VectorXd>& u_hat) const;

  int state_dim() const { return topology().node_count() * local_state_dim(); }
};

class GnnDynamics : public LocalDynamics {
 public:
  GnnDynamics(GnnModel model, GraphTopology topo);

  const GraphTopology& topology() const override { return topo_; }
  int local_state_dim() const override { return model_.dims.state_dim(); }
  int input_dim() const override { return model_.dims.input_dim; }
  Eigen::VectorXd step(const Eigen::VectorXd& x, const Eigen::VectorXd& u) const override;
  StageLinearization linearize(const Eigen::VectorXd& x, const Eigen::VectorXd& u) const override;
  LinearizedDynamics linearize_trajectory(const std::vector<Eigen::VectorXd>& x_hat,
                                          const std::vector<Eigen::VectorXd>& u_hat) const override;

  const GnnModel& model() const { return model_; }

 private:
  GnnModel model_;
  GraphTopology topo_;
};

/// Time-invariant affine model given directly by its blocks.
class AffineDynamics : public LocalDynamics {
 public:
  AffineDynamics(StageLinearization stage, GraphTopology topo);

  const GraphTopology& topology() const override { return topo_; }
  int local_state_dim() const override { return static_cast<int>(stage_.nodes.front().self.rows()); }
  int input_dim() const override { return static_cast<int>(stage_.nodes.front().input.cols()); }
  Eigen::VectorXd step(const Eigen::VectorXd& x, const Eigen::VectorXd& u) const override;
  StageLinearization linearize(const Eigen::VectorXd&, const Eigen::VectorXd&) const override { return stage_; }

 private:
  StageLinearization stage_;
  GraphTopology topo_;
};

/// The simulator itself, linearized by central differences. One control
/// period spans several substeps, so every node may depend on every other:
/// the topology is complete.
class ChainPlantDynamics : public LocalDynamics {
 public:
  explicit ChainPlantDynamics(ChainConfig cfg, double fd_step = 1e-6);

  const GraphTopology& topology() const override { return topo_; }
  int local_state_dim() const override { return 6; }
  int input_dim() const override { return cfg_.input_dim(); }
  Eigen::VectorXd step(const Eigen::VectorXd& x, const Eigen::VectorXd& u) const override;
  StageLinearization linearize(const Eigen::VectorXd& x, const Eigen::VectorXd& u) const override;

 private:
  ChainConfig cfg_;
  GraphTopology topo_;
  double fd_step_;
};

/// Splits a full Jacobian into per-node blocks following the topology.
StageLinearization split_full_jacobian(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b, const Eigen::VectorXd& c,
                                       const GraphTopology& topo, int local_state_dim);

}  // namespace gnnmpc
