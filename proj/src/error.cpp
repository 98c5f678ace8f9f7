#include "cubeperm/error.hpp"

namespace cubeperm {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "invalid argument";
    case ErrorCode::NotPrime: return "not prime";
    case ErrorCode::WrongResidueClass: return "wrong residue class";
    case ErrorCode::NotPrimitiveRoot: return "not a primitive root";
    case ErrorCode::Overflow: return "overflow";
    case ErrorCode::ZeroDivisor: return "zero divisor";
    case ErrorCode::NotCoprimeToThree: return "norm not coprime to 3";
    case ErrorCode::NotABijection: return "not a bijection";
    case ErrorCode::ZeroK: return "k is zero modulo p";
    case ErrorCode::NoRepresentation: return "no representation";
    case ErrorCode::NormalizationFailure: return "normalization failure";
    case ErrorCode::InternalInconsistency: return "internal inconsistency";
  }
  return "unknown error";
}

void raise(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace cubeperm
