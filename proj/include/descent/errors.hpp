#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace descent {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define DESCENT_DEFINE_ERROR(Name)                 \
  class Name : public Error {                      \
   public:                                         \
    using Error::Error;                            \
  }

DESCENT_DEFINE_ERROR(InvalidCoxeterMatrix);
DESCENT_DEFINE_ERROR(InfiniteGroup);
DESCENT_DEFINE_ERROR(RankCapExceeded);
DESCENT_DEFINE_ERROR(UnsupportedType);
DESCENT_DEFINE_ERROR(InvalidSubset);
DESCENT_DEFINE_ERROR(SystemMismatch);
DESCENT_DEFINE_ERROR(NotInDescentAlgebra);
DESCENT_DEFINE_ERROR(NotPositive);
DESCENT_DEFINE_ERROR(WrongType);
DESCENT_DEFINE_ERROR(AutomorphismMismatch);
DESCENT_DEFINE_ERROR(UnavailableAutomorphism);
DESCENT_DEFINE_ERROR(RankTooSmall);
DESCENT_DEFINE_ERROR(NotSelfOpposed);
DESCENT_DEFINE_ERROR(UnknownSuite);
DESCENT_DEFINE_ERROR(CorruptCache);

#undef DESCENT_DEFINE_ERROR

/// Raised by the subset-expression parser; `position` is the 0-based
/// offset of the offending character.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace descent
