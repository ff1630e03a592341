#pragma once

#include "gnnmpc/condensing.hpp"
#include "gnnmpc/dynamics.hpp"
#include "gnnmpc/gnn.hpp"
#include "gnnmpc/mpc.hpp"
#include "gnnmpc/references.hpp"
#include "gnnmpc/training.hpp"
#include "gnnmpc/trunk_sim.hpp"

#include <Eigen/Core>
#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace gnnmpc {

// ---------------------------------------------------------------------------
// Configuration helpers

/// 16 hex digits of FNV-1a over the canonical JSON dump.
std::string config_hash(const nlohmann::json& config);

MpcConfig mpc_config_from_json(const nlohmann::json& j);
TrainConfig train_config_from_json(const nlohmann::json& j, const Dataset& dataset);
GnnArchitecture architecture_from_json(const nlohmann::json& j, int* message_dim = nullptr);
CurveReference curve_from_json(const nlohmann::json& j, const ChainConfig& plant);

/// Diagonal tracking weights. The end effector (highest node index) gets the
/// ee_* weights, every other node the node_* weights.
struct TrackingWeights {
  double ee_position = 1e4;
  double ee_velocity = 1.0;
  double node_position = 0.0;
  double node_velocity = 10.0;
  double input = 1.0;
  double terminal_factor = 1.0;
};

TrackingWeights weights_from_json(const nlohmann::json& j, TrackingWeights defaults = {});

/// Builds the OCP for each control step: end-effector references from a
/// curve, the remaining nodes held at `rest`, box constraints 0 <= u <= u_max.
class TrackingProblem {
 public:
  TrackingProblem(GraphTopology topo, int horizon, const Eigen::VectorXd& rest, int input_dim, double input_max,
                  const TrackingWeights& weights, CurveReference curve, double dt, int reference_shift = 0);

  /// References for the window starting at time index t.
  OcpSpec& at(long t);
  OcpSpec& spec() { return spec_; }
  PointState end_effector_reference(long t) const;

 private:
  OcpSpec spec_;
  CurveReference curve_;
  double dt_;
  int shift_;
};

// ---------------------------------------------------------------------------
// Open-loop evaluation

struct OpenLoopWindow {
  Eigen::VectorXd x0;
  std::vector<InputVector> inputs;
  std::vector<Eigen::VectorXd> truth;  // states 1..H
};

/// Predicted states 1..H from x0 under the inputs.
using Predictor =
    std::function<std::vector<Eigen::VectorXd>(const Eigen::VectorXd& x0, const std::vector<InputVector>& inputs)>;

/// Constant velocity: p_k = p_0 + k dt v_0.
Predictor persistence_predictor(int node_count, int position_dim, double dt);
Predictor model_predictor(std::shared_ptr<const LocalDynamics> dynamics);

/// Windows of `horizon` steps starting after `warmup` steps of each trajectory.
std::vector<OpenLoopWindow> make_windows(const std::vector<Trajectory>& trajectories, int warmup, int horizon);

/// Per-window RMSE of the node position over the horizon.
std::vector<double> node_rmse(const Predictor& predictor, const std::vector<OpenLoopWindow>& windows, int node,
                              int position_dim);

// ---------------------------------------------------------------------------
// Obstacle scenarios

/// Sphere moving in a straight line from `start` to `closest`, holding, then
/// returning to `start`.
struct ObstacleMotion {
  Eigen::Vector3d start = Eigen::Vector3d::Zero();
  Eigen::Vector3d closest = Eigen::Vector3d::Zero();
  double radius = 0.03;
  double delay = 1.0;
  double approach_time = 3.0;
  double hold_time = 2.0;
  double retreat_time = 3.0;

  Eigen::Vector3d center(double t) const;
  double retreat_end() const { return delay + approach_time + hold_time + retreat_time; }
};

/// Appends half-space rows n'(p - o) >= radius + margin to every node in
/// `nodes` at stages 1..N where the predicted position lies within
/// activation * radius of the obstacle; n is the unit vector from the
/// obstacle center to the predicted position. Returns the number of rows.
int add_obstacle_constraints(OcpSpec& spec, const std::vector<Eigen::VectorXd>& predicted,
                             const std::function<Eigen::Vector3d(int stage)>& center, double radius, double margin,
                             double activation, const std::vector<int>& nodes, bool soft = true);

/// Removes every state constraint from the spec.
void clear_state_constraints(OcpSpec& spec);

// ---------------------------------------------------------------------------
// Scaling study

struct ScalingRow {
  int nodes = 0;
  int threads = 1;
  double linearize_ms = 0.0;
  double condense_ms = 0.0;  // condense_gammas + local Hessians/gradients
  double assemble_ms = 0.0;
  double solve_ms = 0.0;     // negative when skipped
  double total_ms = 0.0;
  double condense_bytes = 0.0;  // storage held by the per-node condensed data
};

/// Median over `repeats` timed runs after one warm-up run.
ScalingRow measure_scaling(const GnnModel& model, int nodes, int horizon, int threads, int repeats, bool solve,
                           const TrackingWeights& weights);

/// Least-squares slope of log(y) against log(x).
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

// ---------------------------------------------------------------------------
// Commands. Each writes its artifacts plus summary.json into options.out and
// returns the summary.

struct RunOptions {
  std::optional<std::uint64_t> seed;
  std::filesystem::path out = "out";
  int threads = 1;
};

nlohmann::json cmd_generate(const nlohmann::json& config, const RunOptions& options);
nlohmann::json cmd_train(const nlohmann::json& config, const RunOptions& options);
nlohmann::json cmd_eval_openloop(const nlohmann::json& config, const RunOptions& options);
nlohmann::json cmd_track(const nlohmann::json& config, const RunOptions& options);
nlohmann::json cmd_obstacle(const nlohmann::json& config, const RunOptions& options);
nlohmann::json cmd_scaling(const nlohmann::json& config, const RunOptions& options);

}  // namespace gnnmpc
