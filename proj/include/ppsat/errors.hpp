#pragma once

#include <stdexcept>
#include <string>

namespace ppsat {

// Every failure mode the library can signal. Kinds marked "falsification"
// indicate that a structural guarantee did not hold on an input that passed
// validation; the CLI maps those to a dedicated exit code.
enum class ErrorKind {
  Parse,
  InvalidArgument,
  NonPlanar,
  NotCycleCollection,
  DualNotSimple,
  TooLarge,
  NotCubic,
  NotConnected,
  NotThreeConnected,
  ClauseDegreeNot3,
  OddFace,
  NonAlternatingFace,
  OddFrequencyVariable,
  KTooSmall,
  InvalidPositions,
  PreconditionFailed,
  // falsification signals
  InternalNonCubic,
  BridgeFound,
  NoPerfectMatching,
  NotNAE,
  CsNotThreeConnected,
  DualNotEven,
  NoColoring,
  Not1in3,
  LiftViolation,
};

inline bool is_falsification(ErrorKind k) {
  switch (k) {
    case ErrorKind::InternalNonCubic:
    case ErrorKind::BridgeFound:
    case ErrorKind::NoPerfectMatching:
    case ErrorKind::NotNAE:
    case ErrorKind::CsNotThreeConnected:
    case ErrorKind::DualNotEven:
    case ErrorKind::NoColoring:
    case ErrorKind::Not1in3:
    case ErrorKind::LiftViolation:
      return true;
    default:
      return false;
  }
}

const char* error_kind_name(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace ppsat
