#ifndef SEPSG_ERROR_HPP_
#define SEPSG_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace sepsg {

  // Values are shared with the C API status codes in sepsg.h.
  enum class ErrorCode {
    MalformedInput = 1,
    NotAssociative = 2,
    AmbientMismatch = 3,
    NotASubsemigroup = 4,
    EmptySet = 5,
    OrderTooLarge = 6,
    NotSurjective = 7,
    AlphabetMismatch = 8,
    NotFree = 9,
    UnknownPropertyId = 10,
    InvalidArgument = 11,
    InternalTrichotomyViolation = 12,
    Internal = 13,
  };

  class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, std::string const& what)
        : std::runtime_error(what), _code(code) {}

    ErrorCode code() const noexcept { return _code; }

   private:
    ErrorCode _code;
  };

  [[noreturn]] inline void raise(ErrorCode code, std::string const& what) {
    throw Error(code, what);
  }

}  // namespace sepsg

#endif  // SEPSG_ERROR_HPP_
