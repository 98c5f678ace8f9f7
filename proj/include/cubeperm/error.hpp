#pragma once

#include <stdexcept>
#include <string>

namespace cubeperm {

enum class ErrorCode {
  InvalidArgument,
  NotPrime,
  WrongResidueClass,
  NotPrimitiveRoot,
  Overflow,
  ZeroDivisor,
  NotCoprimeToThree,
  NotABijection,
  ZeroK,
  NoRepresentation,
  NormalizationFailure,
  InternalInconsistency,
};

const char* to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so the
/// C boundary can map it without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void raise(ErrorCode code, const std::string& what);

// Internal invariant guard; never compiled out.
inline void ensure(bool cond, const std::string& what) {
  if (!cond) raise(ErrorCode::InternalInconsistency, what);
}

}  // namespace cubeperm
