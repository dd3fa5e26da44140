#include "cubicfields/errors.hpp"

namespace cubicfields {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidPrecision: return "InvalidPrecision";
    case ErrorCode::InvalidScale: return "InvalidScale";
    case ErrorCode::NotAnRcp: return "NotAnRcp";
    case ErrorCode::NotCubic: return "NotCubic";
    case ErrorCode::DegenerateGamma: return "DegenerateGamma";
    case ErrorCode::DegenerateAngle: return "DegenerateAngle";
    case ErrorCode::NotThreeRealRoots: return "NotThreeRealRoots";
    case ErrorCode::PoleOfTransform: return "PoleOfTransform";
    case ErrorCode::AmbiguousMatch: return "AmbiguousMatch";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::NoCubicCosets: return "NoCubicCosets";
    case ErrorCode::NotLehmerCase: return "NotLehmerCase";
    case ErrorCode::NotShanksPrime: return "NotShanksPrime";
    case ErrorCode::UnknownIdentity: return "UnknownIdentity";
    case ErrorCode::EvaluationDomainError: return "EvaluationDomainError";
    case ErrorCode::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::OfflineMiss: return "OfflineMiss";
    case ErrorCode::BFileFormatError: return "BFileFormatError";
  }
  return "Unknown";
}

}  // namespace cubicfields
