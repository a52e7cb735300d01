#include "growca/fft.hpp"

#include <cassert>
#include <numbers>
#include <utility>

namespace growca {

void fft_radix2(std::span<Complex> data) {
  const std::size_t n = data.size();
  assert(is_power_of_two(n));
  if (n < 2) return;

  // bit-reversal permutation
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(data[i], data[j]);
  }

  std::vector<Complex> twiddle(n / 2);
  for (std::size_t k = 0; k < n / 2; ++k) {
    twiddle[k] = std::polar(1.0, -2.0 * std::numbers::pi * static_cast<double>(k) /
                                     static_cast<double>(n));
  }

  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t half = len / 2;
    const std::size_t stride = n / len;
    for (std::size_t start = 0; start < n; start += len) {
      for (std::size_t k = 0; k < half; ++k) {
        const Complex t = twiddle[k * stride] * data[start + k + half];
        const Complex u = data[start + k];
        data[start + k] = u + t;
        data[start + k + half] = u - t;
      }
    }
  }
}

std::vector<Complex> dft(std::span<const double> samples) {
  const std::size_t n = samples.size();
  std::vector<Complex> out(n);
  if (is_power_of_two(n)) {
    for (std::size_t i = 0; i < n; ++i) out[i] = samples[i];
    fft_radix2(out);
    return out;
  }
  for (std::size_t k = 0; k < n; ++k) {
    Complex acc{0.0, 0.0};
    for (std::size_t j = 0; j < n; ++j) {
      // reduce k*j mod n first to keep the angle small
      const double angle = -2.0 * std::numbers::pi * static_cast<double>((k * j) % n) /
                           static_cast<double>(n);
      acc += samples[j] * std::polar(1.0, angle);
    }
    out[k] = acc;
  }
  return out;
}

}  // namespace growca
