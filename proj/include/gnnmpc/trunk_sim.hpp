#pragma once

#include "gnnmpc/dataset.hpp"
#include "gnnmpc/graph.hpp"

#include <Eigen/Core>
#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace gnnmpc {

/// A tendon pulls its terminal node along a fixed unit direction with a
/// tension in [0, input_max].
struct Tendon {
  Eigen::Vector3d direction;
  int node = 1;  // 0-based, never the base
};

/// Gravity-loaded chain of point masses hanging from a fixed base (node 0).
/// Neighbors are coupled by an axial spring, a bending spring toward the
/// rest offset (0, 0, -L) and a relative damper.
struct ChainConfig {
  int node_count = 4;
  double mass = 0.1;
  double axial_stiffness = 1000.0;
  double bending_stiffness = 20.0;
  double damping = 1.0;
  double segment_length = 0.1;
  Eigen::Vector3d gravity{0.0, 0.0, -9.81};
  std::vector<Tendon> tendons;
  double input_max = 2.0;
  double substep = 0.001;
  double dt = 0.01;

  /// Six tendons at 60 degree spacing with a small upward component. Tendons
  /// j and j+3 form an antagonistic pair ending at node 1 + (j mod 3)(M-2)/2.
  static ChainConfig trunk(int node_count = 4);

  int input_dim() const { return static_cast<int>(tendons.size()); }
  int substeps() const;
  GraphTopology topology() const { return chain_topology(node_count); }
  void validate() const;
};

ChainConfig chain_config_from_json(const nlohmann::json& j);
nlohmann::json to_json(const ChainConfig& cfg);

/// Straight chain along -z with zero velocity.
Eigen::VectorXd rest_state(const ChainConfig& cfg);

/// Static equilibrium under gravity and a constant (clipped) input, found by
/// Newton's method on the free-node forces starting from the rest state.
Eigen::VectorXd equilibrium_state(const ChainConfig& cfg, const Eigen::VectorXd& u);

/// Node accelerations (length 3M, zero for the base) for flattened state x.
Eigen::VectorXd accelerations(const ChainConfig& cfg, const Eigen::VectorXd& x, const Eigen::VectorXd& u);

/// One semi-implicit Euler substep of length cfg.substep; u is used as given.
Eigen::VectorXd sim_substep(const ChainConfig& cfg, const Eigen::VectorXd& x, const Eigen::VectorXd& u);

/// dt / substep substeps with u clipped to [0, input_max]. Throws
/// NumericalError when the state stops being finite.
Eigen::VectorXd sim_step(const ChainConfig& cfg, const Eigen::VectorXd& x, const Eigen::VectorXd& u);
SystemState sim_step(const ChainConfig& cfg, const SystemState& x, const InputVector& u);

/// Kinetic + axial + bending + gravitational energy.
double mechanical_energy(const ChainConfig& cfg, const Eigen::VectorXd& x);

Trajectory simulate(const ChainConfig& cfg, const Eigen::VectorXd& x0, const std::vector<InputVector>& inputs);

enum class SignalKind { RandomWalk, QuasiPeriodic };

struct InputSignalConfig {
  SignalKind kind = SignalKind::RandomWalk;
  double duration = 20.0;  // seconds
  double lower = 0.0;
  double upper = 2.0;
  // random walk: u_{t+1} = clip(u_t + eta), eta ~ U(-step_scale, step_scale)
  double step_scale = 0.05;
  // quasi-periodic: offset + 2-3 sinusoids per channel, |u - offset| <= amplitude_max
  double offset = 1.0;
  double amplitude_min = 0.2;
  double amplitude_max = 0.8;
  double period_min = 0.5;
  double period_max = 4.0;
  std::uint64_t rng_seed = 0;

  void validate() const;
};

InputSignalConfig signal_config_from_json(const nlohmann::json& j);
nlohmann::json to_json(const InputSignalConfig& cfg);
SignalKind signal_kind_from_string(const std::string& s);

/// round(duration / dt) inputs. Deterministic per rng_seed.
std::vector<InputVector> generate_inputs(const InputSignalConfig& cfg, int input_dim, double dt);

/// Trajectories from the hanging equilibrium plus uniform position noise of at
/// most 5% of the segment length. Trajectory t uses its own RNG stream derived
/// from (seed, t), so results do not depend on the thread count.
std::vector<Trajectory> generate_trajectories(const ChainConfig& cfg, const InputSignalConfig& signal,
                                              int trajectory_count, double seconds_each, std::uint64_t seed);

Dataset generate_dataset(const ChainConfig& cfg, const InputSignalConfig& signal, int trajectory_count,
                         double seconds_each, std::uint64_t seed);

}  // namespace gnnmpc
