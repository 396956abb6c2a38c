#pragma once

#include <stdexcept>
#include <string>

namespace approxroots {

// Base of every domain failure raised by the library. The CLI maps these to
// exit code 2; anything else (bad flags, unparsable input) is a usage error.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define APPROXROOTS_ERROR(Name)                                      \
  class Name : public Error {                                        \
   public:                                                           \
    explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
  }

APPROXROOTS_ERROR(NonMonicDivisor);
APPROXROOTS_ERROR(NonMonic);
APPROXROOTS_ERROR(DegreeMismatch);
APPROXROOTS_ERROR(NotPrimitive);
APPROXROOTS_ERROR(NotLocal);
APPROXROOTS_ERROR(IndexOutOfRange);
APPROXROOTS_ERROR(InvalidCoincidence);
APPROXROOTS_ERROR(IllegalFirstExponent);
APPROXROOTS_ERROR(NotIrreducibleEvidence);
APPROXROOTS_ERROR(DegreeLadderInvalid);
APPROXROOTS_ERROR(SmoothBranch);
APPROXROOTS_ERROR(NotResolved);
APPROXROOTS_ERROR(DegenerateMap);
APPROXROOTS_ERROR(IdenticallyZero);
APPROXROOTS_ERROR(IrrationalLeadingRoot);
APPROXROOTS_ERROR(InsufficientPrecision);
APPROXROOTS_ERROR(NotRepresentable);
APPROXROOTS_ERROR(InexactDivision);

#undef APPROXROOTS_ERROR

}  // namespace approxroots
