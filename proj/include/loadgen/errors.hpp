#pragma once

#include <stdexcept>
#include <string>

namespace loadgen {

/// Bad configuration, plan/catalog mismatch, unknown keys. Maps to exit 2.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Environment failure at run time (SUT unreachable for a whole run,
/// filesystem faults while logging). Maps to exit 1.
class EnvError : public std::runtime_error {
 public:
  explicit EnvError(const std::string& what) : std::runtime_error(what) {}
};

/// Non-finite value showed up in the network or its gradients.
class DivergenceError : public std::runtime_error {
 public:
  explicit DivergenceError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace loadgen
