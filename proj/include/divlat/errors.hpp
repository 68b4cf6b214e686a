// errors.hpp — error taxonomy shared by every divlat module.
//
// Every failure raised by the library is a divlat::Error carrying one of the
// codes below, so callers (and the CLI exit-code mapping) can dispatch on the
// code rather than on message text.
#pragma once

#include <stdexcept>
#include <string>

namespace divlat {

enum class ErrorCode {
  kNonPositiveEntry,      // distribution entry <= 0
  kSumNotOne,             // distribution does not sum to 1 within tolerance
  kTooShort,              // distribution has fewer than 2 entries
  kDimensionMismatch,     // P and Q have different lengths
  kNotADivergence,        // mean-sum measure has no normalized generator
  kOutOfRange,            // index/argument outside its documented domain
  kEmptyGrid,             // convexity check called with no sample points
  kIncompleteValues,      // chain check given a partial measure map
  kDenominatorVanishes,   // ratio denominator not strictly convex on grid
  kExtrapolationDiverged, // limit extrapolation failed to converge
  kZeroPolynomial,        // root counting on the zero polynomial
  kOddRowCount,           // input file does not pair rows as (P, Q)
  kConfigError,           // invalid run configuration
  kIoError,               // file could not be read or written
};

inline const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNonPositiveEntry: return "NonPositiveEntry";
    case ErrorCode::kSumNotOne: return "SumNotOne";
    case ErrorCode::kTooShort: return "TooShort";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kNotADivergence: return "NotADivergence";
    case ErrorCode::kOutOfRange: return "OutOfRange";
    case ErrorCode::kEmptyGrid: return "EmptyGrid";
    case ErrorCode::kIncompleteValues: return "IncompleteValues";
    case ErrorCode::kDenominatorVanishes: return "DenominatorVanishes";
    case ErrorCode::kExtrapolationDiverged: return "ExtrapolationDiverged";
    case ErrorCode::kZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::kOddRowCount: return "OddRowCount";
    case ErrorCode::kConfigError: return "ConfigError";
    case ErrorCode::kIoError: return "IoError";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + detail),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace divlat
