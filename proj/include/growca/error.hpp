#pragma once

#include <stdexcept>
#include <string>

namespace growca {

enum class Errc {
  SeedTooShort,
  AllZeroSeed,
  TargetShorterThanState,
  EmptySource,
  EmptyData,
  DataTooShort,
  CompressorFailure,
  EmptyTrace,
  NonMonotoneTrace,
  IoFailure,
};

const char* to_string(Errc code) noexcept;

/// Exception carrying one of the library's error kinds.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace growca
