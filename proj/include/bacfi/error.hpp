#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bacfi {

enum class ErrorKind {
  MalformedDocument,
  NotAPermutation,
  BacfiViolation,
  NotConnected,
  ExponentNotCylinderConstant,
  ExponentTooSmall,
  SurfaceMismatch,
  ChainMapInvalid,
  NotFourValent,
  NotCheckerboardColorable,
  ZeroPolynomial,
  NotSquareFree,
  NoRealRootGreaterThanOne,
  NonConvergence,
  NotSL2,
  TraceTooSmall,
  NotGenusOne,
  UTurnUnsupported,
};

std::string_view to_string(ErrorKind kind);

/// True for kinds that describe a computation that does not apply to an
/// otherwise valid input (the CLI maps these to exit code 2).
bool is_inapplicable(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace bacfi
