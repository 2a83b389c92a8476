#include "treelect/error.hpp"

namespace treelect {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::PortGap: return "PortGap";
    case Errc::AsymmetricAdjacency: return "AsymmetricAdjacency";
    case Errc::NotConnected: return "NotConnected";
    case Errc::HasCycle: return "HasCycle";
    case Errc::BadFormat: return "BadFormat";
    case Errc::BadCode: return "BadCode";
    case Errc::BoundExceeded: return "BoundExceeded";
    case Errc::NoEndlessPaths: return "NoEndlessPaths";
    case Errc::RadiusMismatch: return "RadiusMismatch";
    case Errc::IncompleteView: return "IncompleteView";
    case Errc::TimeTooShort: return "TimeTooShort";
    case Errc::SymmetricTree: return "SymmetricTree";
    case Errc::OddDiameter: return "OddDiameter";
    case Errc::EvenDiameter: return "EvenDiameter";
    case Errc::ListsEqual: return "ListsEqual";
    case Errc::XiTooLarge: return "XiTooLarge";
    case Errc::TimeOutOfRange: return "TimeOutOfRange";
    case Errc::DuplicateStrings: return "DuplicateStrings";
    case Errc::NotPrefixFree: return "NotPrefixFree";
    case Errc::BadAdvice: return "BadAdvice";
    case Errc::NotApplicable: return "NotApplicable";
    case Errc::BadParameters: return "BadParameters";
    case Errc::MarkerExhausted: return "MarkerExhausted";
    case Errc::TooLarge: return "TooLarge";
    case Errc::NoBreaker: return "NoBreaker";
    case Errc::BadConfig: return "BadConfig";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& detail)
    : std::runtime_error(std::string(errc_name(code)) + ": " + detail),
      code_(code),
      detail_(detail) {}

}  // namespace treelect
