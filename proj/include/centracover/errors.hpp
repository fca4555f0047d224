#pragma once

#include <stdexcept>
#include <string>

namespace centracover {

/// Typed failure raised by loaders, constructors and analysis entry points.
/// The CLI maps AbelianGroup to its own exit code; every other code is an
/// input or usage error.
class Error : public std::runtime_error {
 public:
  enum class Code {
    NotLatinSquare,
    NoIdentity,
    NotAssociative,
    BadIndex,
    NotAPermutation,
    ClosureCapExceeded,
    NotASubgroup,
    AbelianGroup,
    NotACenter,
    CentralElement,
    EmptyFamily,
    NotACover,
    CapExceeded,
    UnknownName,
    NotCentral,
    OrderMismatch,
    BadFormat,
  };

  Error(Code code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Code code() const { return code_; }

 private:
  Code code_;
};

}  // namespace centracover
