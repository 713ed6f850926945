#pragma once

#include <stdexcept>
#include <string>

namespace margpoly {

enum class ErrorKind {
  InvalidParameter,
  NotFound,
  InvalidGluing,
  UnsupportedSize,
  Unbounded,
  Infeasible,
  InvalidMarginal,
  UseSymmetry,
  Domain,
  Degenerate,
  Invalid,
  Unsupported,
  Parse,
};

const char* to_string(ErrorKind kind);

/// Single exception type for the toolkit; `kind()` distinguishes the failure.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace margpoly
