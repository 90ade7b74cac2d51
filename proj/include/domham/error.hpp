#pragma once

#include <stdexcept>
#include <string>

namespace domham {

enum class ErrorKind {
  InvalidInput,
  ResourceLimit,
  Underflow,
  NotReducible,
  ConstructionFailed,
};

const char* to_string(ErrorKind kind);

/// Library-wide exception; `kind()` tells callers (the CLI in particular)
/// how to map the failure onto an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace domham
