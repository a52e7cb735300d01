#include "growca/compressor.hpp"

#include <charconv>
#include <limits>
#include <stdexcept>

#include "bzip2_api.hpp"
#include "growca/error.hpp"

namespace growca {

Bzip2Compressor::Bzip2Compressor(int level) : level_(level) {
  if (level < 1 || level > 9) {
    throw std::invalid_argument("bzip2 level must be in 1..9, got " + std::to_string(level));
  }
}

std::string Bzip2Compressor::id() const { return "bzip2-" + std::to_string(level_); }

Bytes Bzip2Compressor::compress(ByteView data) const {
  if (data.size() > std::numeric_limits<unsigned int>::max() / 2) {
    throw Error(Errc::CompressorFailure, "input too large for in-memory bzip2");
  }
  // documented worst case: 1% growth plus 600 bytes
  unsigned int capacity = static_cast<unsigned int>(data.size() + data.size() / 100 + 600);
  Bytes out(capacity);
  const int rc = BZ2_bzBuffToBuffCompress(
      reinterpret_cast<char*>(out.data()), &capacity,
      const_cast<char*>(reinterpret_cast<const char*>(data.data())),
      static_cast<unsigned int>(data.size()), level_, 0, 0);
  if (rc != BZ_OK) {
    throw Error(Errc::CompressorFailure, "BZ2_bzBuffToBuffCompress failed with code " +
                                             std::to_string(rc));
  }
  out.resize(capacity);
  return out;
}

std::unique_ptr<Compressor> make_compressor(std::string_view id) {
  constexpr std::string_view prefix = "bzip2";
  if (id == prefix) return std::make_unique<Bzip2Compressor>();
  if (id.size() == prefix.size() + 2 && id.starts_with(prefix) && id[prefix.size()] == '-') {
    int level = 0;
    const char* first = id.data() + prefix.size() + 1;
    const auto [ptr, ec] = std::from_chars(first, id.data() + id.size(), level);
    if (ec == std::errc{} && ptr == id.data() + id.size() && level >= 1 && level <= 9) {
      return std::make_unique<Bzip2Compressor>(level);
    }
  }
  throw std::invalid_argument("unknown compressor '" + std::string(id) + "'");
}

}  // namespace growca
