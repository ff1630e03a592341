#pragma once

#include <stdexcept>
#include <string>

namespace gnnmpc {

/// Invalid dimensions, malformed files, or inconsistent configuration.
class ConfigError : public std::invalid_argument {
 public:
  explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

/// Divergence, non-finite values, or factorization breakdown.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace gnnmpc
