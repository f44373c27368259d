#pragma once

#include <stdexcept>
#include <string>

namespace dualgroth {

// Base class for all domain errors raised by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : Error {
  using Error::Error;
};
struct NotAPartition : Error {
  using Error::Error;
};
struct NotContained : Error {
  using Error::Error;
};
struct EmptyRestriction : Error {
  using Error::Error;
};
struct NonConvexDomain : Error {
  using Error::Error;
};
struct VariableOutOfRange : Error {
  using Error::Error;
};
struct NotATable12 : Error {
  using Error::Error;
};
struct NotMixed : Error {
  using Error::Error;
};
struct NotADescent : Error {
  using Error::Error;
};
struct NotBenign : Error {
  using Error::Error;
};
struct NotAnRpp : Error {
  using Error::Error;
};
struct NotAnSsyt : Error {
  using Error::Error;
};
struct NotAdmissible : Error {
  using Error::Error;
};
struct NonRepresentableInput : Error {
  using Error::Error;
};
struct DisconnectedShape : Error {
  using Error::Error;
};
struct InfeasibleCeq : Error {
  using Error::Error;
};
struct InvalidArgument : Error {
  using Error::Error;
};

// Internal consistency check. Always on: these guard invariants the
// algorithms rely on (e.g. the range of a transplanted separator row),
// so they must not vanish in release builds.
[[noreturn]] void check_failed(const char* expr, const char* file, int line);

#define DG_CHECK(expr) \
  ((expr) ? (void)0 : ::dualgroth::check_failed(#expr, __FILE__, __LINE__))

}  // namespace dualgroth
