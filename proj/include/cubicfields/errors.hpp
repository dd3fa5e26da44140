#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cubicfields {

enum class ErrorCode {
  InvalidPrecision,
  InvalidScale,
  NotAnRcp,
  NotCubic,
  DegenerateGamma,
  DegenerateAngle,
  NotThreeRealRoots,
  PoleOfTransform,
  AmbiguousMatch,
  NotPrime,
  NoCubicCosets,
  NotLehmerCase,
  NotShanksPrime,
  UnknownIdentity,
  EvaluationDomainError,
  PrecisionExhausted,
  ParseError,
  OfflineMiss,
  BFileFormatError,
};

std::string_view to_string(ErrorCode code) noexcept;

// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t offset, std::vector<std::string> expected, const std::string& what)
      : Error(ErrorCode::ParseError, what), offset_(offset), expected_(std::move(expected)) {}

  /// Byte offset into the source text where parsing stopped.
  std::size_t offset() const noexcept { return offset_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

}  // namespace cubicfields
