#pragma once

#include <stdexcept>
#include <string>

namespace lagrangelab {

/// Failure categories; the CLI maps these onto process exit codes.
enum class ErrorKind {
  Input,       // malformed document, dimension mismatch, bad parameters
  Structural,  // empty, unbounded, singular or otherwise rejected geometry
  Invariant,   // an internal cross-check disagreed
  TooLarge,    // enumeration would exceed the configured cap
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace lagrangelab
