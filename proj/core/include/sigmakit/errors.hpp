#pragma once

#include <stdexcept>
#include <string>

namespace sigmakit {

// Every failure mode has its own type so callers (and the CLI) can react
// precisely. All derive from Error which carries a stable kind string used
// in machine-readable output.
class Error : public std::runtime_error {
public:
  Error(std::string kind, const std::string& msg)
      : std::runtime_error(kind + ": " + msg), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

private:
  std::string kind_;
};

#define SIGMAKIT_ERROR(Name)                                        \
  class Name : public Error {                                       \
  public:                                                           \
    explicit Name(const std::string& msg) : Error(#Name, msg) {}    \
  }

SIGMAKIT_ERROR(NotAGroup);
SIGMAKIT_ERROR(SizeLimit);
SIGMAKIT_ERROR(NotNormal);
SIGMAKIT_ERROR(NotFinite);
SIGMAKIT_ERROR(NonHomomorphicRule);
SIGMAKIT_ERROR(WindowViolation);
SIGMAKIT_ERROR(DepthExceeded);
SIGMAKIT_ERROR(NotASubshift);
SIGMAKIT_ERROR(NotASubgroupClass);
SIGMAKIT_ERROR(Undecided);
SIGMAKIT_ERROR(InconsistentCertificate);
SIGMAKIT_ERROR(InvariantViolation);
SIGMAKIT_ERROR(NotSimpleAlphabet);
SIGMAKIT_ERROR(UnexpectedShape);
SIGMAKIT_ERROR(IncompatibleAction);
SIGMAKIT_ERROR(OracleBudgetExceeded);
SIGMAKIT_ERROR(ParseError);

#undef SIGMAKIT_ERROR

}  // namespace sigmakit
