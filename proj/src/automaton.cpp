#include "growca/automaton.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

#include "growca/error.hpp"

namespace growca {
namespace {

// Writes the diffused image of src[0..n) into dst and returns the mod-256
// sum of the written cells. src and dst must not overlap.
std::uint8_t diffuse_into(const std::uint8_t* src, std::uint8_t* dst, std::size_t n) {
  if (n == 0) return 0;
  if (n < 3) {
    for (std::size_t l = 0; l < n; ++l) {
      const std::size_t m2 = (l + 2 * n - 2) % n;
      const std::size_t m1 = (l + n - 1) % n;
      dst[l] = static_cast<std::uint8_t>(src[m2] + src[m1] + src[l]);
    }
  } else {
    dst[0] = static_cast<std::uint8_t>(src[n - 2] + src[n - 1] + src[0]);
    dst[1] = static_cast<std::uint8_t>(src[n - 1] + src[0] + src[1]);
    for (std::size_t l = 2; l < n; ++l) {
      dst[l] = static_cast<std::uint8_t>(src[l - 2] + src[l - 1] + src[l]);
    }
  }
  // Widened accumulator: 255 * n fits comfortably for any register we can
  // allocate, and the loop vectorizes.
  std::uint64_t sum = 0;
  for (std::size_t l = 0; l < n; ++l) sum += dst[l];
  return static_cast<std::uint8_t>(sum & 0xFFu);
}

void check_target(std::size_t current, std::size_t target) {
  if (target < current) {
    throw Error(Errc::TargetShorterThanState,
                "target length " + std::to_string(target) +
                    " is shorter than the current register length " +
                    std::to_string(current));
  }
}

}  // namespace

Seed::Seed(Bytes bytes) : bytes_(std::move(bytes)) {
  if (bytes_.size() < kMinSeedLength) {
    throw Error(Errc::SeedTooShort, "seed must be at least " +
                                        std::to_string(kMinSeedLength) +
                                        " bytes, got " +
                                        std::to_string(bytes_.size()));
  }
  if (std::all_of(bytes_.begin(), bytes_.end(), [](std::uint8_t b) { return b == 0; })) {
    throw Error(Errc::AllZeroSeed, "seed must not be all zero bytes");
  }
}

Bytes diffuse(ByteView cells) {
  Bytes out(cells.size());
  const std::size_t n = cells.size();
  for (std::size_t l = 0; l < n; ++l) {
    out[l] = static_cast<std::uint8_t>(cells[(l + 2 * n - 2) % n] +
                                       cells[(l + n - 1) % n] + cells[l]);
  }
  return out;
}

Bytes step(ByteView cells) {
  Bytes next = diffuse(cells);
  const unsigned sum = std::accumulate(next.begin(), next.end(), 0u);
  next.push_back(static_cast<std::uint8_t>(sum % 256));
  return next;
}

Bytes grow_register(Bytes cells, std::size_t target_length) {
  check_target(cells.size(), target_length);
  if (cells.size() == target_length) return cells;

  cells.reserve(target_length);
  Bytes next;
  next.reserve(target_length);
  while (cells.size() < target_length) {
    const std::size_t n = cells.size();
    next.resize(n + 1);
    next[n] = diffuse_into(cells.data(), next.data(), n);
    std::swap(cells, next);
  }
  return cells;
}

CAState seed_state(const Seed& seed) {
  const ByteView b = seed.bytes();
  return CAState(Bytes(b.begin(), b.end()), 0);
}

Bytes diffuse(const CAState& state) { return diffuse(state.cells()); }

CAState step(const CAState& state) {
  return CAState(step(state.cells()), state.steps_ + 1);
}

CAState grow_to(CAState state, std::size_t target_length) {
  check_target(state.length(), target_length);
  const std::size_t added = target_length - state.length();
  state.cells_ = grow_register(std::move(state.cells_), target_length);
  state.steps_ += added;
  return state;
}

std::vector<CAState> growth_trace(const Seed& seed, std::size_t target_length) {
  check_target(seed.size(), target_length);
  std::vector<CAState> trace;
  trace.reserve(target_length - seed.size() + 1);
  trace.push_back(seed_state(seed));
  while (trace.back().length() < target_length) {
    trace.push_back(step(trace.back()));
  }
  return trace;
}

}  // namespace growca
