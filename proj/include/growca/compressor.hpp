#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "growca/automaton.hpp"

namespace growca {

/// Lossless compressor plug-in. compress() must be deterministic for a given
/// id(). Instances are not required to be thread-safe.
class Compressor {
 public:
  virtual ~Compressor() = default;
  virtual std::string id() const = 0;
  /// Throws Error{CompressorFailure} on failure.
  virtual Bytes compress(ByteView data) const = 0;
};

/// libbz2 in-memory compression, block size `level` x 100k. Level 9 is the
/// bzip2 default. id() is "bzip2-<level>".
class Bzip2Compressor final : public Compressor {
 public:
  explicit Bzip2Compressor(int level = 9);
  std::string id() const override;
  Bytes compress(ByteView data) const override;

 private:
  int level_;
};

/// Accepts "bzip2" (level 9) or "bzip2-1" .. "bzip2-9".
/// Throws std::invalid_argument for anything else.
std::unique_ptr<Compressor> make_compressor(std::string_view id);

}  // namespace growca
