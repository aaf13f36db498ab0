#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tangle {

enum class Errc {
  NegativeCount,
  SelfPair,
  OutOfRange,
  DuplicatePair,
  EmptyMove,
  OverlappingPositions,
  PositionOutOfRange,
  InvalidLayer,
  InvalidTangle,
  WireCountMismatch,
  CyclicOrder,
  TooFewWires,
  BudgetExhausted,
  LimitReached,
  InfeasibleList,
  NotSimple,
  LengthMismatch,
  TooManyVariables,
  InvalidFormula,
  NotNAE,
  ArmInterleaving,
  InvalidArgument,
  ParseError,
};

constexpr std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::NegativeCount: return "NegativeCount";
    case Errc::SelfPair: return "SelfPair";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::DuplicatePair: return "DuplicatePair";
    case Errc::EmptyMove: return "EmptyMove";
    case Errc::OverlappingPositions: return "OverlappingPositions";
    case Errc::PositionOutOfRange: return "PositionOutOfRange";
    case Errc::InvalidLayer: return "InvalidLayer";
    case Errc::InvalidTangle: return "InvalidTangle";
    case Errc::WireCountMismatch: return "WireCountMismatch";
    case Errc::CyclicOrder: return "CyclicOrder";
    case Errc::TooFewWires: return "TooFewWires";
    case Errc::BudgetExhausted: return "BudgetExhausted";
    case Errc::LimitReached: return "LimitReached";
    case Errc::InfeasibleList: return "InfeasibleList";
    case Errc::NotSimple: return "NotSimple";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::TooManyVariables: return "TooManyVariables";
    case Errc::InvalidFormula: return "InvalidFormula";
    case Errc::NotNAE: return "NotNAE";
    case Errc::ArmInterleaving: return "ArmInterleaving";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail)
      : std::runtime_error(std::string(errc_name(code)) + ": " + detail), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace tangle
