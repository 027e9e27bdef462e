#ifndef PERMSTAT_ERROR_HPP
#define PERMSTAT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace permstat {

enum class ErrorCode {
  MalformedPermutation,
  ProfileUndefined,
  CannotReduce,
  MalformedWord,
  OracleBoundExceeded,
  UndefinedAssignment,
  NotApplicable,
  InvalidWitnessRequest,
  Range,
};

const char *to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string &what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const { return code_; }

private:
  ErrorCode code_;
};

} // namespace permstat

#endif
