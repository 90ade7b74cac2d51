#include "domham/error.hpp"

namespace domham {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "invalid-input";
    case ErrorKind::ResourceLimit: return "resource-limit";
    case ErrorKind::Underflow: return "underflow";
    case ErrorKind::NotReducible: return "not-reducible";
    case ErrorKind::ConstructionFailed: return "construction-failed";
  }
  return "unknown";
}

}  // namespace domham
