#include "bacfi/error.hpp"

namespace bacfi {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MalformedDocument: return "MalformedDocument";
    case ErrorKind::NotAPermutation: return "NotAPermutation";
    case ErrorKind::BacfiViolation: return "BacfiViolation";
    case ErrorKind::NotConnected: return "NotConnected";
    case ErrorKind::ExponentNotCylinderConstant: return "ExponentNotCylinderConstant";
    case ErrorKind::ExponentTooSmall: return "ExponentTooSmall";
    case ErrorKind::SurfaceMismatch: return "SurfaceMismatch";
    case ErrorKind::ChainMapInvalid: return "ChainMapInvalid";
    case ErrorKind::NotFourValent: return "NotFourValent";
    case ErrorKind::NotCheckerboardColorable: return "NotCheckerboardColorable";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::NotSquareFree: return "NotSquareFree";
    case ErrorKind::NoRealRootGreaterThanOne: return "NoRealRootGreaterThanOne";
    case ErrorKind::NonConvergence: return "NonConvergence";
    case ErrorKind::NotSL2: return "NotSL2";
    case ErrorKind::TraceTooSmall: return "TraceTooSmall";
    case ErrorKind::NotGenusOne: return "NotGenusOne";
    case ErrorKind::UTurnUnsupported: return "UTurnUnsupported";
  }
  return "Unknown";
}

bool is_inapplicable(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::TraceTooSmall:
    case ErrorKind::NotGenusOne:
    case ErrorKind::UTurnUnsupported:
    case ErrorKind::NoRealRootGreaterThanOne:
      return true;
    default:
      return false;
  }
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

}  // namespace bacfi
