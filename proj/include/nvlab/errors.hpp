#pragma once

#include <stdexcept>
#include <string>

namespace nvlab {

/// Bad configuration or bad input values. Maps to CLI exit code 1.
/// The message names the offending key or argument.
class ValidationError : public std::runtime_error {
  public:
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A simulated experiment failed at run time (tracking lost, unresolved
/// spectrum, fit divergence). Maps to CLI exit code 2.
class ExperimentError : public std::runtime_error {
  public:
    explicit ExperimentError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace nvlab
