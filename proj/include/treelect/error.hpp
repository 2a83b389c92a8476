#pragma once

#include <stdexcept>
#include <string>

namespace treelect {

enum class Errc {
  // tree construction and codes
  PortGap,
  AsymmetricAdjacency,
  NotConnected,
  HasCycle,
  BadFormat,
  BadCode,
  BoundExceeded,
  // views
  NoEndlessPaths,
  RadiusMismatch,
  IncompleteView,
  // elections and schemes
  TimeTooShort,
  SymmetricTree,
  OddDiameter,
  EvenDiameter,
  ListsEqual,
  XiTooLarge,
  TimeOutOfRange,
  DuplicateStrings,
  NotPrefixFree,
  BadAdvice,
  NotApplicable,
  // generators
  BadParameters,
  MarkerExhausted,
  // pair breaking
  TooLarge,
  NoBreaker,
  // harness
  BadConfig,
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail);

  Errc code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  Errc code_;
  std::string detail_;
};

}  // namespace treelect
