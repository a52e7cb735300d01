#include "growca/cipher.hpp"

#include "growca/error.hpp"

namespace growca {

Bytes keystream(const CipherKey& key, std::size_t n) {
  if (n == 0) throw Error(Errc::EmptySource, "keystream length must be positive");
  const ByteView raw = key.bytes();
  if (n <= raw.size()) return Bytes(raw.begin(), raw.begin() + static_cast<std::ptrdiff_t>(n));
  return grow_register(Bytes(raw.begin(), raw.end()), n);
}

Bytes crypt(const CipherKey& key, ByteView data) {
  if (data.empty()) throw Error(Errc::EmptySource, "Empty source.");
  Bytes out = keystream(key, data.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] ^= data[i];
  return out;
}

}  // namespace growca
