#pragma once

#include <cstddef>

#include "growca/automaton.hpp"

namespace growca {

/// Secret key for the XOR cipher. Same validation as Seed.
class CipherKey {
 public:
  explicit CipherKey(Bytes bytes) : seed_(std::move(bytes)) {}
  explicit CipherKey(ByteView bytes) : seed_(bytes) {}

  const Seed& seed() const noexcept { return seed_; }
  ByteView bytes() const noexcept { return seed_.bytes(); }
  std::size_t size() const noexcept { return seed_.size(); }

 private:
  Seed seed_;
};

/// First n bytes of the register grown from `key` to length n. When n does not
/// exceed the key length no growth happens and the raw key bytes are returned.
///
/// Not prefix-stable: keystream(k, n) is generally not a prefix of
/// keystream(k, m) for key.size() < n < m, since every step rewrites the
/// whole register. Request the full length up front.
Bytes keystream(const CipherKey& key, std::size_t n);

/// out[i] = keystream(key, data.size())[i] ^ data[i]. Self-inverse.
/// Throws Error{EmptySource} for empty input.
Bytes crypt(const CipherKey& key, ByteView data);

}  // namespace growca
