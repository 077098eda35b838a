#pragma once

#include <stdexcept>
#include <string>

namespace ulc {

enum class ErrorCode {
  InvalidInput,
  NonIntegerExponent,
  SingularPivot,
  NonPositiveScale,
  WrongRadius,
  NotUltrametric,
  DomainTooSmall,
  MultiplicityTooHigh,
  BadSizes,
  BadIndices,
  DegreeMismatch,
  CapExceeded,
  ParseError,
};

inline const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::NonIntegerExponent: return "NonIntegerExponent";
    case ErrorCode::SingularPivot: return "SingularPivot";
    case ErrorCode::NonPositiveScale: return "NonPositiveScale";
    case ErrorCode::WrongRadius: return "WrongRadius";
    case ErrorCode::NotUltrametric: return "NotUltrametric";
    case ErrorCode::DomainTooSmall: return "DomainTooSmall";
    case ErrorCode::MultiplicityTooHigh: return "MultiplicityTooHigh";
    case ErrorCode::BadSizes: return "BadSizes";
    case ErrorCode::BadIndices: return "BadIndices";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

/// Carries the triple whose maximum pairwise distance is attained only once.
class NotUltrametricError : public Error {
 public:
  NotUltrametricError(int i, int j, int k)
      : Error(ErrorCode::NotUltrametric,
              "max distance attained only once on triple (" + std::to_string(i) +
                  "," + std::to_string(j) + "," + std::to_string(k) + ")"),
        i_(i), j_(j), k_(k) {}
  int i() const { return i_; }
  int j() const { return j_; }
  int k() const { return k_; }

 private:
  int i_, j_, k_;
};

}  // namespace ulc
