#pragma once

#include <stdexcept>
#include <string>

namespace holocert {

// Exit-code class attached to every library error; the CLI maps these 1:1.
enum class ErrorKind {
  input = 1,         // malformed input, bad prime, unknown name
  verification = 2,  // a truncated identity or reconstruction did not hold
  bound = 3,         // a proven height bound was exceeded
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

#define HOLOCERT_DEFINE_ERROR(Name, Kind)                                  \
  class Name : public Error {                                              \
   public:                                                                 \
    explicit Name(const std::string& what) : Error(ErrorKind::Kind, what) {} \
  };

HOLOCERT_DEFINE_ERROR(NotPLocal, input)
HOLOCERT_DEFINE_ERROR(ZeroDenominator, input)
HOLOCERT_DEFINE_ERROR(BadPrime, input)
HOLOCERT_DEFINE_ERROR(NotSeriesExpandable, input)
HOLOCERT_DEFINE_ERROR(NotMomAtZero, input)
HOLOCERT_DEFINE_ERROR(LeadingZero, input)
HOLOCERT_DEFINE_ERROR(PreconditionViolated, input)
HOLOCERT_DEFINE_ERROR(UnknownSeries, input)
HOLOCERT_DEFINE_ERROR(UnknownCase, input)
HOLOCERT_DEFINE_ERROR(ParseError, input)
HOLOCERT_DEFINE_ERROR(ReconstructionFailed, verification)
HOLOCERT_DEFINE_ERROR(NoCycleFound, verification)
HOLOCERT_DEFINE_ERROR(VerificationFailed, verification)
HOLOCERT_DEFINE_ERROR(SylvesterSingular, verification)
HOLOCERT_DEFINE_ERROR(HeightBoundViolated, bound)

#undef HOLOCERT_DEFINE_ERROR

}  // namespace holocert
