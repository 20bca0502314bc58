#include "dshell/errors.hpp"

namespace dshell {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::NonConvergence: return "NonConvergence";
    case ErrorKind::NoSuchPole: return "NoSuchPole";
    case ErrorKind::PoleHit: return "PoleHit";
    case ErrorKind::DegeneratePole: return "DegeneratePole";
    case ErrorKind::ToleranceNotMet: return "ToleranceNotMet";
  }
  return "Unknown";
}

}  // namespace dshell
