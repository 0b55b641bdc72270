#pragma once

#include <stdexcept>
#include <string>

namespace grovesim {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad argument: index out of range, malformed pattern, non-finite angle.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// Requested register is empty or exceeds the supported qubit count.
class SizeError : public Error {
 public:
  using Error::Error;
};

/// Circuit contains an operation with no OpenQASM 2.0 spelling.
class ExportError : public Error {
 public:
  ExportError(std::size_t op_index, const std::string& what)
      : Error("op " + std::to_string(op_index) + ": " + what), op_index_(op_index) {}

  std::size_t op_index() const noexcept { return op_index_; }

 private:
  std::size_t op_index_;
};

/// Broken internal invariant, e.g. normalization drift in the kernel.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace grovesim
