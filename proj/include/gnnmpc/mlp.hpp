#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <random>
#include <vector>

namespace gnnmpc {

/// Fully connected network, ReLU on hidden layers and identity on the output.
/// weights[l] maps layer l (dims[l]) to layer l+1 (dims[l+1]).
struct Mlp {
  std::vector<int> layer_dims;
  std::vector<Eigen::MatrixXd> weights;
  std::vector<Eigen::VectorXd> biases;

  static Mlp zeros(std::vector<int> dims);
  /// He-scaled Gaussian hidden layers; the output layer is shrunk by
  /// output_gain so a fresh network starts close to the zero map.
  static Mlp random(std::vector<int> dims, std::mt19937_64& rng, double output_gain = 0.1);

  int input_dim() const { return layer_dims.front(); }
  int output_dim() const { return layer_dims.back(); }
  int layer_count() const { return static_cast<int>(weights.size()); }
  Eigen::Index parameter_count() const;

  /// Throws ConfigError on shape mismatch or non-finite entries.
  void validate() const;

  double squared_norm() const;

  /// Columns are samples.
  Eigen::MatrixXd forward(const Eigen::MatrixXd& inputs) const;

  /// Flat parameter order: W_0 (column-major), b_0, W_1, b_1, ...
  void copy_parameters_to(Eigen::Ref<Eigen::VectorXd> out) const;
  void copy_parameters_from(const Eigen::Ref<const Eigen::VectorXd>& in);
};

/// Activations recorded by a batched forward pass; reused by the backward pass.
struct MlpTape {
  std::vector<Eigen::MatrixXd> layer_inputs;  // post-activation input of each layer
  Eigen::MatrixXd output;
};

void forward(const Mlp& net, const Eigen::MatrixXd& inputs, MlpTape& tape);

/// Reverse pass for output cotangent `d_output` (out x batch). Parameter
/// gradients are accumulated into `grad` (same flat layout as
/// copy_parameters_to). Returns the input cotangent when requested.
void backward(const Mlp& net, const MlpTape& tape, const Eigen::MatrixXd& d_output,
              Eigen::Ref<Eigen::VectorXd> grad, Eigen::MatrixXd* d_input = nullptr);

/// Exact Jacobian d output / d input at one point (out x in). The ReLU
/// derivative at a pre-activation of exactly zero is taken as zero.
Eigen::MatrixXd jacobian(const Mlp& net, const Eigen::VectorXd& input, Eigen::VectorXd* output = nullptr);

}  // namespace gnnmpc
