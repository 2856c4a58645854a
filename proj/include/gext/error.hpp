#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gext {

enum class ErrorCode {
  InvalidRim,
  MismatchedParameters,
  ProjectiveModule,
  NotTwoPeak,
  MalformedMatrix,
  EmptyInput,
  NonMonomialFactor,
  TooLarge,
  KernelRelationFailed,
  EvenDegree,
  OddDegree,
  DegreeOutOfRange,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidRim: return "InvalidRim";
    case ErrorCode::MismatchedParameters: return "MismatchedParameters";
    case ErrorCode::ProjectiveModule: return "ProjectiveModule";
    case ErrorCode::NotTwoPeak: return "NotTwoPeak";
    case ErrorCode::MalformedMatrix: return "MalformedMatrix";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::NonMonomialFactor: return "NonMonomialFactor";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::KernelRelationFailed: return "KernelRelationFailed";
    case ErrorCode::EvenDegree: return "EvenDegree";
    case ErrorCode::OddDegree: return "OddDegree";
    case ErrorCode::DegreeOutOfRange: return "DegreeOutOfRange";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace gext
