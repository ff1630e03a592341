#pragma once

#include <Eigen/Core>

#include <cstddef>
#include <vector>

namespace gnnmpc {

/// Directed interaction graph. Node indices are 0-based here; node i receives
/// messages from every j in in_neighbors(i). Self-coupling is implicit.
class GraphTopology {
 public:
  GraphTopology() = default;

  /// Validates the neighbor lists: indices in range, no self loops, no
  /// duplicates, and every list no longer than neighbor_bound.
  GraphTopology(std::vector<std::vector<int>> in_neighbors, int neighbor_bound);

  int node_count() const { return static_cast<int>(in_neighbors_.size()); }
  int neighbor_bound() const { return neighbor_bound_; }
  const std::vector<int>& in_neighbors(int i) const { return in_neighbors_[i]; }
  const std::vector<std::vector<int>>& all_in_neighbors() const { return in_neighbors_; }

  /// Topology with nodes relabeled so that old node i becomes perm[i].
  GraphTopology permuted(const std::vector<int>& perm) const;

  friend bool operator==(const GraphTopology&, const GraphTopology&) = default;

 private:
  std::vector<std::vector<int>> in_neighbors_;
  int neighbor_bound_ = 0;
};

/// Chain i-1 <-> i <-> i+1 with d = 2. Throws ConfigError for M = 0.
GraphTopology chain_topology(int node_count);

/// Every node hears every other node, d = M - 1 (at least 1).
GraphTopology complete_topology(int node_count);

struct NodeState {
  Eigen::VectorXd position;
  Eigen::VectorXd velocity;

  friend bool operator==(const NodeState& a, const NodeState& b) {
    return a.position.size() == b.position.size() && a.velocity.size() == b.velocity.size() &&
           a.position == b.position && a.velocity == b.velocity;
  }
};

struct SystemState {
  std::vector<NodeState> nodes;

  int node_count() const { return static_cast<int>(nodes.size()); }
  int position_dim() const { return nodes.empty() ? 0 : static_cast<int>(nodes.front().position.size()); }
  bool is_finite() const;

  friend bool operator==(const SystemState&, const SystemState&) = default;
};

using InputVector = Eigen::VectorXd;

struct Trajectory {
  std::vector<SystemState> states;
  std::vector<InputVector> inputs;
  double dt = 0.0;

  /// |states| == |inputs| + 1 and all states share node count and dimension.
  bool consistent() const;
};

/// [p^1, v^1, p^2, v^2, ...] in node order.
Eigen::VectorXd flatten_state(const SystemState& s);

/// Inverse of flatten_state. Throws ConfigError when the length is not
/// node_count * 2 * position_dim.
SystemState unflatten_state(const Eigen::Ref<const Eigen::VectorXd>& x, int node_count, int position_dim);

/// All-zero state.
SystemState zero_state(int node_count, int position_dim);

}  // namespace gnnmpc
