#include "permstat/error.hpp"

namespace permstat {

const char *to_string(ErrorCode code) {
  switch (code) {
  case ErrorCode::MalformedPermutation:
    return "malformed-permutation";
  case ErrorCode::ProfileUndefined:
    return "profile-undefined";
  case ErrorCode::CannotReduce:
    return "cannot-reduce";
  case ErrorCode::MalformedWord:
    return "malformed-word";
  case ErrorCode::OracleBoundExceeded:
    return "oracle-bound-exceeded";
  case ErrorCode::UndefinedAssignment:
    return "undefined-assignment";
  case ErrorCode::NotApplicable:
    return "not-applicable";
  case ErrorCode::InvalidWitnessRequest:
    return "invalid-witness-request";
  case ErrorCode::Range:
    return "range";
  }
  return "unknown";
}

} // namespace permstat
