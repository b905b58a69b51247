#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hyps {

enum class Errc {
  SlopeOutOfRange,
  NonPositiveMultiplicity,
  IncomparableEndpoints,
  PeriodMismatch,
  InvalidArgument,
  NotCM,
  NonIntegralMultiplicity,
  InvalidTower,
  InvalidDatum,
  NotSymmetric,
  PreconditionNotHypersymmetric,
  BoundExceeded,
  MixedEndpoints,
  NoUniqueExtreme,
  RangeError,
  SlopesDoNotPair,
  Schema,
};

std::string_view errc_name(Errc code) noexcept;

// Raised for every rejected input or violated precondition. Callers that
// need to distinguish failures switch on code().
class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

}  // namespace hyps
