#pragma once

#include <stdexcept>
#include <string>

namespace ars {

// Base class for all library errors. Parse-scoped errors carry a source
// location (1-based line/column); 0 means "no location".
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
  Error(const std::string& msg, int line, int col)
      : std::runtime_error(msg + " at line " + std::to_string(line) +
                           ", column " + std::to_string(col)),
        line_(line), col_(col) {}

  int line() const { return line_; }
  int column() const { return col_; }

private:
  int line_ = 0;
  int col_ = 0;
};

#define ARS_DEFINE_ERROR(NAME)                              \
  class NAME : public Error {                               \
  public:                                                   \
    using Error::Error;                                     \
  }

ARS_DEFINE_ERROR(WidthMismatch);
ARS_DEFINE_ERROR(NonIncreasingTimes);
ARS_DEFINE_ERROR(BadRange);
ARS_DEFINE_ERROR(NotProgressive);
ARS_DEFINE_ERROR(InvalidSchedule);
ARS_DEFINE_ERROR(ArityCapExceeded);
ARS_DEFINE_ERROR(InputWidthMismatch);
ARS_DEFINE_ERROR(ComposabilityError);
ARS_DEFINE_ERROR(EmptyCommonInput);
ARS_DEFINE_ERROR(EmptyIntersection);

// Parse errors.
ARS_DEFINE_ERROR(SyntaxError);
ARS_DEFINE_ERROR(UnknownVariable);
ARS_DEFINE_ERROR(ArityError);
ARS_DEFINE_ERROR(DuplicateName);
ARS_DEFINE_ERROR(UnresolvedReference);

#undef ARS_DEFINE_ERROR

}  // namespace ars
