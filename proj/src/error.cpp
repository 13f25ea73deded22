#include "zclosure/error.hpp"

namespace zclosure {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "invalid-argument";
    case ErrorKind::InvalidWeight: return "invalid-weight";
    case ErrorKind::InvalidInterval: return "invalid-interval";
    case ErrorKind::InvalidPair: return "invalid-pair";
    case ErrorKind::InvalidShape: return "invalid-shape";
    case ErrorKind::DimensionMismatch: return "dimension-mismatch";
    case ErrorKind::UndefinedDegree: return "undefined-degree";
    case ErrorKind::SizeCapExceeded: return "size-cap-exceeded";
    case ErrorKind::PreconditionUnmet: return "precondition-unmet";
    case ErrorKind::Internal: return "internal";
  }
  return "unknown";
}

void raise(ErrorKind kind, const std::string& message) {
  throw Error(kind, std::string(to_string(kind)) + ": " + message);
}

}  // namespace zclosure
