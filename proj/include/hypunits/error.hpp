#pragma once

#include <stdexcept>
#include <string>

namespace hypunits {

enum class ErrorCode {
  MalformedInput,
  NotAssociative,
  NotAQuasigroup,
  NoIdentity,
  SubsetNotClosed,
  UnknownName,
  NotAGroup,
  NotAFactor,
  NonAssociativeUnsupported,
  FactorizationOverflow,
  NotSimple,
  OrderCapExceeded,
  CapExceeded,
};

const char* to_string(ErrorCode code);

// All recoverable failures carry a code so the CLI can map them to exit statuses.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hypunits
