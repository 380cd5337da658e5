#include "ppsat/errors.hpp"

namespace ppsat {

const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NonPlanar: return "NonPlanar";
    case ErrorKind::NotCycleCollection: return "NotCycleCollection";
    case ErrorKind::DualNotSimple: return "DualNotSimple";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::NotCubic: return "NotCubic";
    case ErrorKind::NotConnected: return "NotConnected";
    case ErrorKind::NotThreeConnected: return "NotThreeConnected";
    case ErrorKind::ClauseDegreeNot3: return "ClauseDegreeNot3";
    case ErrorKind::OddFace: return "OddFace";
    case ErrorKind::NonAlternatingFace: return "NonAlternatingFace";
    case ErrorKind::OddFrequencyVariable: return "OddFrequencyVariable";
    case ErrorKind::KTooSmall: return "KTooSmall";
    case ErrorKind::InvalidPositions: return "InvalidPositions";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
    case ErrorKind::InternalNonCubic: return "InternalNonCubic";
    case ErrorKind::BridgeFound: return "BridgeFound";
    case ErrorKind::NoPerfectMatching: return "NoPerfectMatching";
    case ErrorKind::NotNAE: return "NotNAE";
    case ErrorKind::CsNotThreeConnected: return "CsNotThreeConnected";
    case ErrorKind::DualNotEven: return "DualNotEven";
    case ErrorKind::NoColoring: return "NoColoring";
    case ErrorKind::Not1in3: return "Not1in3";
    case ErrorKind::LiftViolation: return "LiftViolation";
  }
  return "Unknown";
}

}  // namespace ppsat
