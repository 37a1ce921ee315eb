#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace clawtile {

/// Base class for every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid grid, solver or boundary arguments.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Configuration parse or validation failure.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Shallow-water Riemann problem with a non-positive depth on either side.
class DryStateError : public Error {
 public:
  using Error::Error;
};

/// A sweep produced a NaN or Inf. Carries the linear (padded) index of the
/// first offending cell and, once known, the step number.
class NumericalBlowup : public Error {
 public:
  NumericalBlowup(const std::string& what, std::int64_t cell_offset,
                  std::int64_t step = -1)
      : Error(what), cell_offset_(cell_offset), step_(step) {}

  std::int64_t cell_offset() const noexcept { return cell_offset_; }
  std::int64_t step() const noexcept { return step_; }

 private:
  std::int64_t cell_offset_;
  std::int64_t step_;
};

/// Time-step controller could not find an admissible step.
class StepControlError : public Error {
 public:
  using Error::Error;
};

/// Malformed frame file.
class FrameError : public Error {
 public:
  using Error::Error;
};

class TruncatedFrame : public FrameError {
 public:
  using FrameError::FrameError;
};

}  // namespace clawtile
