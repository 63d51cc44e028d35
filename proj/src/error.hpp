#ifndef SES_ERROR_HPP
#define SES_ERROR_HPP

#include <stdexcept>
#include <string>

namespace ses {

enum class ErrorCode {
  invalid_argument,
  encoding,
  granularity_mismatch,
  parse,
  conflict,
  apply_mismatch,
  guard,
  no_result,
};

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

}  // namespace ses

#endif
