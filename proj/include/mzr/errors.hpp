#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mzr {

/// Invalid argument, shape, or index for an operation.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A time integration produced non-finite or runaway values.
class InstabilityError : public std::runtime_error {
 public:
  InstabilityError(const std::string& what, std::int64_t step)
      : std::runtime_error(what + " (step " + std::to_string(step) + ")"), step_(step) {}
  std::int64_t step() const { return step_; }

 private:
  std::int64_t step_;
};

/// Training loss became non-finite.
class TrainingError : public std::runtime_error {
 public:
  TrainingError(const std::string& what, std::int64_t iteration)
      : std::runtime_error(what + " (iteration " + std::to_string(iteration) + ")"),
        iteration_(iteration) {}
  std::int64_t iteration() const { return iteration_; }

 private:
  std::int64_t iteration_;
};

/// Malformed file: wrong magic, version, truncated payload, checksum or shape mismatch.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Tensor dimensions in a file manifest disagree with its payload.
class ShapeError : public FormatError {
 public:
  using FormatError::FormatError;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid run configuration.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace mzr
