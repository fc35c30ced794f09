#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace affine_abacus {

enum class ErrorCode {
  RankTooSmall,
  ResidueClash,
  ZeroResidue,
  BalanceViolation,
  WrongLength,
  NotMinimal,
  ParityViolation,
  NotActiveBead,
  NotAPartition,
  NotACore,
  NotSymmetric,
  BoxOutside,
  StuckPeel,
  MalformedBounded,
  NotEnumerated,
  UnrenderableCombination,
  ParseError,
};

inline constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::RankTooSmall: return "RankTooSmall";
    case ErrorCode::ResidueClash: return "ResidueClash";
    case ErrorCode::ZeroResidue: return "ZeroResidue";
    case ErrorCode::BalanceViolation: return "BalanceViolation";
    case ErrorCode::WrongLength: return "WrongLength";
    case ErrorCode::NotMinimal: return "NotMinimal";
    case ErrorCode::ParityViolation: return "ParityViolation";
    case ErrorCode::NotActiveBead: return "NotActiveBead";
    case ErrorCode::NotAPartition: return "NotAPartition";
    case ErrorCode::NotACore: return "NotACore";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::BoxOutside: return "BoxOutside";
    case ErrorCode::StuckPeel: return "StuckPeel";
    case ErrorCode::MalformedBounded: return "MalformedBounded";
    case ErrorCode::NotEnumerated: return "NotEnumerated";
    case ErrorCode::UnrenderableCombination: return "UnrenderableCombination";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Raised by every validating constructor and operation in the library.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

namespace detail {

// Floor division and non-negative remainder; the modular bookkeeping below
// constantly crosses zero.
inline constexpr int floor_div(int a, int b) {
  int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline constexpr int ceil_div(int a, int b) { return -floor_div(-a, b); }

inline constexpr int mod(int a, int b) { return a - b * floor_div(a, b); }

}  // namespace detail

}  // namespace affine_abacus
