#pragma once

#include "gnnmpc/graph.hpp"
#include "gnnmpc/linearized_dynamics.hpp"
#include "gnnmpc/mlp.hpp"

#include <Eigen/Core>

#include <cstdint>
#include <vector>

namespace gnnmpc {

struct GnnDims {
  int position_dim = 3;  // n_p
  int input_dim = 6;     // n_u
  int message_dim = 8;   // n_m

  int state_dim() const { return 2 * position_dim; }
  friend bool operator==(const GnnDims&, const GnnDims&) = default;
};

/// Per-feature affine maps between physical units and network units.
/// Node features use (x - state_mean) / state_scale, edge features
/// (x^i - x^j) / state_scale, inputs (u - input_mean) / input_scale, and the
/// velocity increment is target_scale * phi(...).
struct Normalization {
  Eigen::VectorXd state_mean, state_scale;  // n̄_x
  Eigen::VectorXd input_mean, input_scale;  // n_u
  Eigen::VectorXd target_scale;             // n_p

  static Normalization identity(const GnnDims& dims);
  void validate(const GnnDims& dims) const;
};

struct GnnArchitecture {
  std::vector<int> psi_hidden{32, 32};
  std::vector<int> phi_hidden{64, 64};
};

/// Interaction network with sum aggregation and a semi-implicit Euler update:
///   m_i  = sum_{j in N_i} psi(x^i - x^j)
///   v_i' = v_i + phi(x^i, m_i, u)
///   p_i' = p_i + dt * v_i'
struct GnnModel {
  double dt = 0.01;
  GnnDims dims;
  Normalization normalization;
  Mlp psi;  // n̄_x -> n_m
  Mlp phi;  // n̄_x + n_m + n_u -> n_p

  static GnnModel zeros(const GnnDims& dims, const GnnArchitecture& arch, double dt);
  static GnnModel random(const GnnDims& dims, const GnnArchitecture& arch, double dt, std::uint64_t seed);

  /// Throws ConfigError when layer sizes, normalization, or dt are inconsistent.
  void validate() const;

  Eigen::Index parameter_count() const { return psi.parameter_count() + phi.parameter_count(); }
  /// psi parameters first, then phi.
  Eigen::VectorXd parameters() const;
  void set_parameters(const Eigen::Ref<const Eigen::VectorXd>& theta);
};

/// One forward step on flattened states (length M * n̄_x).
Eigen::VectorXd gnn_step(const GnnModel& model, const GraphTopology& topo, const Eigen::VectorXd& x,
                         const Eigen::VectorXd& u);
SystemState gnn_step(const GnnModel& model, const GraphTopology& topo, const SystemState& x, const InputVector& u);

/// states[0] = x0, states[k+1] = gnn_step(states[k], inputs[k]).
Trajectory rollout(const GnnModel& model, const GraphTopology& topo, const SystemState& x0,
                   const std::vector<InputVector>& inputs);

/// Exact per-node Jacobian blocks of gnn_step at (x_hat, u_hat) together with
/// the offset that makes the affine model exact at that point.
StageLinearization linearize_stage(const GnnModel& model, const GraphTopology& topo, const Eigen::VectorXd& x_hat,
                                   const Eigen::VectorXd& u_hat);
StageLinearization linearize_stage(const GnnModel& model, const GraphTopology& topo, const SystemState& x_hat,
                                   const InputVector& u_hat);

/// Stage-wise linearization along {x_hat_k, u_hat_k}, k = 0..N-1. Stages are
/// independent and evaluated in parallel when threads are available.
LinearizedDynamics linearize_trajectory(const GnnModel& model, const GraphTopology& topo,
                                        const std::vector<Eigen::VectorXd>& x_hat,
                                        const std::vector<Eigen::VectorXd>& u_hat);

}  // namespace gnnmpc
