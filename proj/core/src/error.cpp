#include "hyps/error.hpp"

namespace hyps {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::SlopeOutOfRange: return "SlopeOutOfRange";
    case Errc::NonPositiveMultiplicity: return "NonPositiveMultiplicity";
    case Errc::IncomparableEndpoints: return "IncomparableEndpoints";
    case Errc::PeriodMismatch: return "PeriodMismatch";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::NotCM: return "NotCM";
    case Errc::NonIntegralMultiplicity: return "NonIntegralMultiplicity";
    case Errc::InvalidTower: return "InvalidTower";
    case Errc::InvalidDatum: return "InvalidDatum";
    case Errc::NotSymmetric: return "NotSymmetric";
    case Errc::PreconditionNotHypersymmetric: return "PreconditionNotHypersymmetric";
    case Errc::BoundExceeded: return "BoundExceeded";
    case Errc::MixedEndpoints: return "MixedEndpoints";
    case Errc::NoUniqueExtreme: return "NoUniqueExtreme";
    case Errc::RangeError: return "RangeError";
    case Errc::SlopesDoNotPair: return "SlopesDoNotPair";
    case Errc::Schema: return "Schema";
  }
  return "Unknown";
}

}  // namespace hyps
