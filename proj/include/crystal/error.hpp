#ifndef CRYSTAL_ERROR_HPP
#define CRYSTAL_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace crystal {

enum class ErrorKind {
  NotPrime,
  EvenCharacteristic,
  InvalidArgument,
  FieldMismatch,
  AmbientMismatch,
  SingularOperator,
  BudgetExceeded,
  NotCharacteristic,
  NotStrict,
  RootUnavailable,
  RootFieldTooSmall,
  DescentFailed,
  ModelInconsistent,
  InvalidM,
  InvalidBField,
  DistinguishedVectorInside,
  ZeroLambda,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so
/// callers (and the CLI) can branch on it without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace crystal

#endif  // CRYSTAL_ERROR_HPP
