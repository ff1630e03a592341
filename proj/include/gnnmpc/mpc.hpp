#pragma once

#include "gnnmpc/condensing.hpp"
#include "gnnmpc/dynamics.hpp"
#include "gnnmpc/qp_solver.hpp"

#include <Eigen/Core>

#include <filesystem>
#include <functional>
#include <iosfwd>
#include <vector>

namespace gnnmpc {

enum class FallbackPolicy { HoldPrevious, Zero };

struct MpcConfig {
  int horizon = 20;
  double dt = 0.01;
  SolverSettings solver;
  bool warm_start = true;
  FallbackPolicy fallback = FallbackPolicy::HoldPrevious;
  /// Linearize-condense-solve passes per control step; 1 is real-time iteration.
  int sqp_iterations = 1;
  /// First-order low-pass on the applied input; 0 disables it.
  double input_filter_time_constant = 0.0;
  /// Run OcpSpec::validate on every step.
  bool validate_spec = true;

  void validate() const;
};

struct StepTiming {
  double linearize_ms = 0.0;
  double condense_ms = 0.0;
  double solve_ms = 0.0;
  double total_ms = 0.0;
};

struct MpcState {
  std::vector<Eigen::VectorXd> x_hat;  // N + 1 linearization states
  std::vector<Eigen::VectorXd> u_hat;  // N linearization inputs
  Eigen::VectorXd solution;            // stacked u* of the last successful solve
  std::vector<Eigen::VectorXd> planned_states;  // x*_0..x*_N of the last successful solve
  Eigen::VectorXd last_applied;
  Eigen::VectorXd filtered_input;
  long step = 0;
  long solver_calls = 0;
  std::vector<StepTiming> timings;
};

/// x_hat_k = x for k = 0..N, u_hat_k = 0.
MpcState mpc_init(const Eigen::VectorXd& x_measured, int input_dim, const MpcConfig& cfg);

struct StepResult {
  Eigen::VectorXd u_applied;
  QpStatus status = QpStatus::Optimal;
  int iterations = 0;
  bool fallback = false;
  StepTiming timing;
};

/// One receding-horizon step: overwrite x_hat_0 with the measurement,
/// linearize along {x_hat, u_hat}, condense, solve, apply u*_0 and shift the
/// linearization trajectory by one stage with the tail duplicated.
StepResult mpc_step(const LocalDynamics& dynamics, const OcpSpec& spec, const Eigen::VectorXd& x_measured,
                    MpcState& state, const MpcConfig& cfg);

struct ClosedLoopStep {
  long step = 0;
  double t = 0.0;
  QpStatus status = QpStatus::Optimal;
  int iterations = 0;
  bool fallback = false;
  StepTiming timing;
  Eigen::VectorXd u;
  Eigen::VectorXd node_errors;  // position error to the stage-0 reference per node
};

struct ClosedLoopLog {
  std::vector<ClosedLoopStep> steps;
  Trajectory measured;  // states x_0..x_T and applied inputs

  double optimal_fraction() const;
  double mean_total_ms(std::size_t skip = 0) const;
};

void write_closed_loop_csv(std::ostream& os, const ClosedLoopLog& log);
void write_closed_loop_csv(const std::filesystem::path& path, const ClosedLoopLog& log);

using PlantStep = std::function<Eigen::VectorXd(const Eigen::VectorXd& x, const Eigen::VectorXd& u)>;
/// OCP data for the control step starting at time index t given the measurement
/// and the controller state before the step (x_hat is the shifted prediction).
using SpecAtTime = std::function<const OcpSpec&(long t, const Eigen::VectorXd& x, const MpcState& state)>;

ClosedLoopLog run_closed_loop(const PlantStep& plant, const LocalDynamics& dynamics, const SpecAtTime& spec_at,
                              const Eigen::VectorXd& x0, long steps, const MpcConfig& cfg);

}  // namespace gnnmpc
