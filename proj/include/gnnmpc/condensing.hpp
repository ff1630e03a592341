#pragma once

#include "gnnmpc/graph.hpp"
#include "gnnmpc/linearized_dynamics.hpp"

#include <Eigen/Core>

#include <vector>

namespace gnnmpc {

/// Half-space rows C x <= d on one node's local state at one stage. Rows
/// flagged soft get a nonnegative slack in the condensed QP.
struct StateConstraint {
  Eigen::MatrixXd matrix;  // rows x n̄_x
  Eigen::VectorXd bound;
  std::vector<bool> soft;  // empty means all hard

  int rows() const { return static_cast<int>(matrix.rows()); }
  bool is_soft(int r) const { return !soft.empty() && soft[r]; }
};

struct InputConstraint {
  Eigen::MatrixXd matrix;  // rows x n_u
  Eigen::VectorXd bound;
  int rows() const { return static_cast<int>(matrix.rows()); }
};

/// Tracking OCP over a bounded-neighborhood graph:
///   sum_i sum_{k=0..N} ||x^i_k - x^{i,r}_k||^2_{Q^i_k} + sum_{k<N} ||u_k - u^r_k||^2_{R_k}
/// subject to the linearized dynamics, per-node state constraints for
/// k = 0..N and input constraints for k = 0..N-1.
struct OcpSpec {
  GraphTopology topology;
  int horizon = 0;
  int local_state_dim = 0;
  int input_dim = 0;

  std::vector<std::vector<Eigen::MatrixXd>> state_cost;       // [node][k], k = 0..N
  std::vector<std::vector<Eigen::VectorXd>> state_reference;  // [node][k]
  std::vector<Eigen::MatrixXd> input_cost;                    // [k], k = 0..N-1
  std::vector<Eigen::VectorXd> input_reference;               // [k]
  std::vector<std::vector<StateConstraint>> state_constraints;  // [node][k], k = 0..N
  std::vector<InputConstraint> input_constraints;               // [k]

  double slack_linear_weight = 1e3;
  double slack_quadratic_weight = 1e4;

  /// Zero state costs and references, R_k = input_weight * I, no constraints.
  static OcpSpec make(const GraphTopology& topo, int horizon, int local_state_dim, int input_dim,
                      double input_weight = 1.0);

  /// Q symmetric PSD (symmetric-part eigenvalues >= -1e-10), R symmetric PD
  /// (eigenvalues >= 1e-12), consistent sizes. Throws ConfigError.
  void validate() const;

  int state_constraint_rows(int node) const;
  int input_constraint_rows() const;
};

/// Block-diagonal stacked cost with constant terms dropped:
/// q̄^i_k = -2 Q^i_k x^{i,r}_k and r̄_k = -2 R_k u^r_k.
struct StandardFormCost {
  std::vector<std::vector<Eigen::MatrixXd>> node_hessian;  // Q̄^i blocks per stage
  std::vector<Eigen::VectorXd> node_linear;                // q̄^i, length n̄_x (N+1)
  std::vector<Eigen::MatrixXd> input_hessian;              // R̄ blocks
  Eigen::VectorXd input_linear;                            // r̄, length n_u N
};

StandardFormCost cost_to_standard_form(const OcpSpec& spec);

/// x^i = gamma_u * u + gamma_x for the stacked trajectory of node i.
struct NodeGammas {
  Eigen::MatrixXd gamma_u;  // n̄_x (N+1) x n_u N, block lower triangular
  Eigen::VectorXd gamma_x;  // n̄_x (N+1)
};

/// Everything one node contributes to the condensed QP.
struct LocalCondensed {
  NodeGammas gammas;
  Eigen::MatrixXd hessian;  // H^i
  Eigen::VectorXd gradient;  // g^i
  Eigen::MatrixXd constraint_matrix;  // C̄^i_x Γ^i_u
  Eigen::VectorXd constraint_bound;   // d̄^i_x - C̄^i_x Γ^i_x
  std::vector<bool> soft;
};

/// min u'Hu + g'u  s.t.  C u <= d. Rows listed in soft_rows carry a slack s
/// (C_r u - s <= d_r, s >= 0) priced at slack_linear * s + slack_quadratic * s^2.
struct CondensedQp {
  Eigen::MatrixXd hessian;
  Eigen::VectorXd gradient;
  Eigen::MatrixXd constraint_matrix;
  Eigen::VectorXd constraint_bound;
  std::vector<int> soft_rows;
  double slack_linear = 1e3;
  double slack_quadratic = 1e4;
};

/// Per-node forward recursion: at stage n node i combines the last block
/// rows of (Γ^j)_n for j in N_i ∪ {i}, then appends B^i_n and c^i_n.
/// Parallel over nodes within each stage.
std::vector<NodeGammas> condense_gammas(const LinearizedDynamics& lin, const GraphTopology& topo,
                                        const Eigen::VectorXd& x0);

/// H^i = Γ_u' Q̄ Γ_u and g^i = Γ_u' (2 Q̄ Γ_x + q̄), exploiting the block
/// lower-triangular structure of Γ_u.
void local_hessian_gradient(const NodeGammas& gammas, const std::vector<Eigen::MatrixXd>& q_blocks,
                            const Eigen::VectorXd& q_linear, Eigen::MatrixXd& hessian, Eigen::VectorXd& gradient);

/// C̄^i_x Γ^i_u and d̄^i_x - C̄^i_x Γ^i_x, stages in ascending order.
void local_constraints(const NodeGammas& gammas, const std::vector<StateConstraint>& constraints,
                       Eigen::MatrixXd& matrix, Eigen::VectorXd& bound, std::vector<bool>& soft);

/// Gammas, local Hessian/gradient and constraints for every node.
std::vector<LocalCondensed> condense_nodes(const OcpSpec& spec, const StandardFormCost& cost,
                                           const LinearizedDynamics& lin, const Eigen::VectorXd& x0);

/// Sums in ascending node order, then adds R̄ and r̄. Input rows come first,
/// then each node's state rows in ascending node order.
CondensedQp assemble_qp(const std::vector<LocalCondensed>& locals, const StandardFormCost& cost,
                        const std::vector<InputConstraint>& input_constraints, double slack_linear = 1e3,
                        double slack_quadratic = 1e4);

/// Standard form + condense_nodes + assemble_qp.
CondensedQp condense(const OcpSpec& spec, const LinearizedDynamics& lin, const Eigen::VectorXd& x0,
                     std::vector<LocalCondensed>* locals_out = nullptr);

/// Per-node stacked trajectories x^i = Γ^i_u u + Γ^i_x.
std::vector<Eigen::VectorXd> reconstruct_states(const std::vector<LocalCondensed>& locals, const Eigen::VectorXd& u);
std::vector<Eigen::VectorXd> reconstruct_states(const std::vector<NodeGammas>& gammas, const Eigen::VectorXd& u);

/// Flattened full state at every stage 0..N from per-node stacked trajectories.
std::vector<Eigen::VectorXd> stage_states(const std::vector<Eigen::VectorXd>& per_node, int local_state_dim);

/// Full-size A_k, B_k, c_k from the per-node blocks (zero where there is no edge).
struct FullStage {
  Eigen::MatrixXd a;
  Eigen::MatrixXd b;
  Eigen::VectorXd c;
};
FullStage assemble_full_stage(const StageLinearization& stage, const GraphTopology& topo);

/// Classical condensing with explicit full Γ_u, Γ_x. Reference path for the
/// per-node recursion; refuses problems with more than 5000 stacked state rows.
CondensedQp dense_condense_oracle(const OcpSpec& spec, const LinearizedDynamics& lin, const Eigen::VectorXd& x0);

}  // namespace gnnmpc
