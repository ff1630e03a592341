#pragma once

#include "gnnmpc/gnn.hpp"

#include <filesystem>
#include <string>

namespace gnnmpc {

/// JSON model file: dt, dims {n_p, n_u, n_m}, normalization {state_mean,
/// state_scale, input_mean, input_scale, target_scale}, psi and phi as
/// {layer_dims, weights (row-major nested arrays), biases}. Doubles are written
/// in shortest round-trip form so a reload is bit-identical.
std::string model_to_json(const GnnModel& model);
GnnModel model_from_json(const std::string& text);

void save_model(const GnnModel& model, const std::filesystem::path& path);
GnnModel load_model(const std::filesystem::path& path);

}  // namespace gnnmpc
