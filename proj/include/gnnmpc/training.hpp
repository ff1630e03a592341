#pragma once

#include "gnnmpc/dataset.hpp"
#include "gnnmpc/gnn.hpp"

#include <cstdint>
#include <vector>

namespace gnnmpc {

struct TrainConfig {
  double learning_rate = 1e-3;
  int batch_size = 64;
  int max_epochs = 200;
  int patience = 10;
  double lr_decay_factor = 0.5;
  int max_lr_decays = 3;
  double l2_lambda = 1e-6;
  /// Diagonal of O per local state component (length n̄_x, shared by all
  /// nodes). Empty means identity.
  Eigen::VectorXd weighting;
  std::uint64_t rng_seed = 0;
  double adam_beta1 = 0.9;
  double adam_beta2 = 0.999;
  double adam_epsilon = 1e-8;

  void validate(int state_dim) const;
};

/// (1/N_d) sum ||x_{t+1} - F(x_t, u_t)||_O^2 + lambda ||theta||^2 over all
/// records of the dataset. Throws ConfigError for an empty dataset.
double loss(const GnnModel& model, const Dataset& dataset, const TrainConfig& config);
double loss(const GnnModel& model, const Dataset& dataset, const TrainConfig& config, const std::vector<int>& indices);

/// Loss over `indices` and its gradient with respect to GnnModel::parameters().
double loss_and_gradient(const GnnModel& model, const Dataset& dataset, const TrainConfig& config,
                         const std::vector<int>& indices, Eigen::VectorXd& gradient);

/// O = 1 / var(x_{t+1} - F_0(x_t)) per component, where F_0 is the zero
/// network (constant velocity). Puts every residual channel on unit scale.
Eigen::VectorXd residual_weighting(const Dataset& dataset);

struct EpochRecord {
  int epoch = 0;
  double train_loss = 0.0;
  double validation_loss = 0.0;
  double learning_rate = 0.0;
};

struct TrainResult {
  GnnModel model;  // parameters with the best validation loss
  std::vector<EpochRecord> history;
  double initial_train_loss = 0.0;
  double initial_validation_loss = 0.0;
  int best_epoch = 0;
};

/// Adam with a patience scheduler: the learning rate is multiplied by
/// lr_decay_factor after `patience` epochs without validation improvement and
/// training stops once patience runs out after max_lr_decays decays.
/// Deterministic given rng_seed. Throws NumericalError on a non-finite loss.
TrainResult train(const GnnModel& initial, const Dataset& dataset, const TrainConfig& config);

}  // namespace gnnmpc
