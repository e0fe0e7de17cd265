#pragma once

#include <stdexcept>
#include <string>

namespace cl3 {

enum class Errc {
  NotPrime,
  EvenCharacteristic,
  ReduciblePolynomial,
  DivisionByZero,
  ZeroArgument,
  MixedFields,
  TooLarge,
  EqualPoints,
  NonIncidentPair,
  SingularMatrix,
  NotElliptic,
  NotTangent,
  NotIncident,
  ConditionsViolated,
  NoSolution,
  NoSwitchablePair,
  PartitionFailure,
  SizeNotMultiple,
  GeometryMismatch,
  FormatError,
  UnknownLine,
  InvalidArgument,
};

const char* to_string(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc c, const std::string& what)
      : std::runtime_error(std::string(to_string(c)) + ": " + what), code_(c) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc c, const std::string& what) { throw Error(c, what); }

}  // namespace cl3
