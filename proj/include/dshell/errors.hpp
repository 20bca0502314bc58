#pragma once

#include <stdexcept>
#include <string>

namespace dshell {

enum class ErrorKind {
  InvalidInput,
  NonConvergence,
  NoSuchPole,
  PoleHit,
  DegeneratePole,
  ToleranceNotMet,
};

const char* to_string(ErrorKind kind) noexcept;

/// Base of every error raised by the library. The kind drives the CLI exit code.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

  /// True for input/domain problems, false for numerical failures.
  bool is_input_error() const noexcept {
    return kind_ == ErrorKind::InvalidInput || kind_ == ErrorKind::NoSuchPole;
  }

private:
  ErrorKind kind_;
};

[[noreturn]] inline void raise(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace dshell
