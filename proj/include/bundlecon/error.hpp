#pragma once

#include <stdexcept>
#include <string>

namespace bundlecon {

/// Base of all domain errors raised by the library. `kind()` is a stable
/// machine-readable tag used in CLI reports.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

#define BUNDLECON_DEFINE_ERROR(Name)                                   \
  class Name : public Error {                                          \
   public:                                                             \
    explicit Name(const std::string& message) : Error(#Name, message) {} \
  }

BUNDLECON_DEFINE_ERROR(InvalidArgument);
BUNDLECON_DEFINE_ERROR(SingularMatrix);
BUNDLECON_DEFINE_ERROR(OutOfDomain);
BUNDLECON_DEFINE_ERROR(NegativeShift);
BUNDLECON_DEFINE_ERROR(UtilityOutOfRange);
BUNDLECON_DEFINE_ERROR(SingularBundling);
BUNDLECON_DEFINE_ERROR(UnitInconsistentInput);
BUNDLECON_DEFINE_ERROR(NoStrictWitness);
BUNDLECON_DEFINE_ERROR(InfeasibleSupply);
BUNDLECON_DEFINE_ERROR(ParseError);
BUNDLECON_DEFINE_ERROR(SchemaError);
BUNDLECON_DEFINE_ERROR(UsageError);

#undef BUNDLECON_DEFINE_ERROR

/// Raised when an internal post-condition fails (a bug, not bad input).
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace bundlecon
