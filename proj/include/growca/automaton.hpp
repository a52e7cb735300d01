#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace growca {

using Bytes = std::vector<std::uint8_t>;
using ByteView = std::span<const std::uint8_t>;

/// Minimum seed/key length accepted anywhere in the library.
inline constexpr std::size_t kMinSeedLength = 9;

/// Validated initial register content: at least kMinSeedLength bytes, not
/// all zero. Throws Error{SeedTooShort | AllZeroSeed}.
class Seed {
 public:
  explicit Seed(Bytes bytes);
  explicit Seed(ByteView bytes) : Seed(Bytes(bytes.begin(), bytes.end())) {}

  ByteView bytes() const noexcept { return bytes_; }
  std::size_t size() const noexcept { return bytes_.size(); }

 private:
  Bytes bytes_;
};

/// The growing byte register C(t). Only reachable from a Seed, so the
/// length never drops below kMinSeedLength.
class CAState {
 public:
  ByteView cells() const noexcept { return cells_; }
  std::size_t length() const noexcept { return cells_.size(); }
  std::size_t step_count() const noexcept { return steps_; }
  std::size_t initial_length() const noexcept { return cells_.size() - steps_; }

  friend bool operator==(const CAState&, const CAState&) = default;

 private:
  friend CAState seed_state(const Seed& seed);
  friend CAState step(const CAState& state);
  friend CAState grow_to(CAState state, std::size_t target_length);

  CAState(Bytes cells, std::size_t steps) : cells_(std::move(cells)), steps_(steps) {}

  Bytes cells_;
  std::size_t steps_ = 0;
};

// Register-level rule. These accept any register length (including the
// short registers below kMinSeedLength) and never validate content.

/// new[l] = (old[(l-2) mod L] + old[(l-1) mod L] + old[l]) mod 256, computed
/// synchronously from `cells`.
Bytes diffuse(ByteView cells);

/// Diffuse, then append the mod-256 sum of the whole diffused register.
Bytes step(ByteView cells);

/// Applies step() until the register has `target_length` cells. Uses a
/// fused diffusion/sum kernel with double buffering.
/// Throws Error{TargetShorterThanState}.
Bytes grow_register(Bytes cells, std::size_t target_length);

// State-level API.

CAState seed_state(const Seed& seed);
Bytes diffuse(const CAState& state);
CAState step(const CAState& state);

/// Throws Error{TargetShorterThanState} when target_length < state.length().
CAState grow_to(CAState state, std::size_t target_length);

/// One snapshot per step, starting with the seeded state itself, so the
/// trace holds target_length - seed.size() + 1 states.
std::vector<CAState> growth_trace(const Seed& seed, std::size_t target_length);

}  // namespace growca
