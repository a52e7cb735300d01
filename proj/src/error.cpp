#include "growca/error.hpp"

namespace growca {

const char* to_string(Errc code) noexcept {
  switch (code) {
    case Errc::SeedTooShort: return "SeedTooShort";
    case Errc::AllZeroSeed: return "AllZeroSeed";
    case Errc::TargetShorterThanState: return "TargetShorterThanState";
    case Errc::EmptySource: return "EmptySource";
    case Errc::EmptyData: return "EmptyData";
    case Errc::DataTooShort: return "DataTooShort";
    case Errc::CompressorFailure: return "CompressorFailure";
    case Errc::EmptyTrace: return "EmptyTrace";
    case Errc::NonMonotoneTrace: return "NonMonotoneTrace";
    case Errc::IoFailure: return "IoFailure";
  }
  return "Unknown";
}

}  // namespace growca
