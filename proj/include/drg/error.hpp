#ifndef DRG_ERROR_HPP
#define DRG_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace drg {

enum class ErrorCode {
  InvalidArray,
  NegativeA,
  NonIntegralDistanceDegree,
  NonIntegralP,
  DomainError,
  MultiplicityNotIntegral,
  DegenerateSpectrum,
  Inapplicable,
  PremiseViolated,
  NoFeasibleEps,
  TheoremViolation,
  NotBipartite,
  NotAntipodal,
  DiameterTwo,
  NonIntegral,
  ShapeViolation,
  SizeLimitExceeded,
  Disconnected,
  NotDistanceRegular,
  ParseError,
};

inline std::string_view to_string(ErrorCode code)
{
  switch (code) {
    case ErrorCode::InvalidArray: return "InvalidArray";
    case ErrorCode::NegativeA: return "NegativeA";
    case ErrorCode::NonIntegralDistanceDegree: return "NonIntegralDistanceDegree";
    case ErrorCode::NonIntegralP: return "NonIntegralP";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::MultiplicityNotIntegral: return "MultiplicityNotIntegral";
    case ErrorCode::DegenerateSpectrum: return "DegenerateSpectrum";
    case ErrorCode::Inapplicable: return "Inapplicable";
    case ErrorCode::PremiseViolated: return "PremiseViolated";
    case ErrorCode::NoFeasibleEps: return "NoFeasibleEps";
    case ErrorCode::TheoremViolation: return "TheoremViolation";
    case ErrorCode::NotBipartite: return "NotBipartite";
    case ErrorCode::NotAntipodal: return "NotAntipodal";
    case ErrorCode::DiameterTwo: return "DiameterTwo";
    case ErrorCode::NonIntegral: return "NonIntegral";
    case ErrorCode::ShapeViolation: return "ShapeViolation";
    case ErrorCode::SizeLimitExceeded: return "SizeLimitExceeded";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::NotDistanceRegular: return "NotDistanceRegular";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above; the
/// message is prefixed with the code name.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code)
  {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& detail) { throw Error(code, detail); }

}  // namespace drg

#endif  // DRG_ERROR_HPP
