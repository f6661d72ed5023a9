#pragma once

#include <stdexcept>
#include <string>

namespace wb {

class Error : public std::runtime_error {
 public:
  Error(const char* kind, const std::string& what)
      : std::runtime_error(std::string(kind) + ": " + what), kind_(kind) {}
  const char* kind() const noexcept { return kind_; }

 private:
  const char* kind_;
};

#define WB_DEFINE_ERROR(Name) \
  struct Name : Error {       \
    explicit Name(const std::string& w) : Error(#Name, w) {} \
  }

WB_DEFINE_ERROR(CapExceeded);
WB_DEFINE_ERROR(NotMember);
WB_DEFINE_ERROR(ParseError);
WB_DEFINE_ERROR(ConductorOverflow);
WB_DEFINE_ERROR(NotTwoIntegral);
WB_DEFINE_ERROR(BadDegree);
WB_DEFINE_ERROR(TypeUnavailable);
WB_DEFINE_ERROR(NotDihedral);
WB_DEFINE_ERROR(BadIndex);
WB_DEFINE_ERROR(Unclassifiable);
WB_DEFINE_ERROR(NonIndicatorValue);
WB_DEFINE_ERROR(NotRealBlock);
WB_DEFINE_ERROR(NotIdempotent);
WB_DEFINE_ERROR(FieldTooSmall);
WB_DEFINE_ERROR(NotInO2);
WB_DEFINE_ERROR(NoSolution);
WB_DEFINE_ERROR(NegativeMultiplicity);
WB_DEFINE_ERROR(UsageError);

#undef WB_DEFINE_ERROR

}  // namespace wb
