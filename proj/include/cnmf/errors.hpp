#pragma once

#include <stdexcept>
#include <string>

namespace cnmf {

// Raised when a numerical routine fails to meet its internal error target
// (quadrature refinement cap, grid refinement cap, non-finite log-posterior).
class ConvergenceError : public std::runtime_error {
 public:
  explicit ConvergenceError(const std::string& msg) : std::runtime_error(msg) {}
};

// Raised on malformed input files (CSV layout, non-integer counts,
// non-stochastic signature columns beyond tolerance).
class DataFormatError : public std::runtime_error {
 public:
  explicit DataFormatError(const std::string& msg) : std::runtime_error(msg) {}
};

// Raised on invalid flag combinations in the CLI layer.
class UsageError : public std::runtime_error {
 public:
  explicit UsageError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace cnmf
