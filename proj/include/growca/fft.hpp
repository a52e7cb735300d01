#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace growca {

using Complex = std::complex<double>;

constexpr bool is_power_of_two(std::size_t n) noexcept { return n != 0 && (n & (n - 1)) == 0; }

/// In-place iterative radix-2 forward transform, X[k] = sum x[n] e^{-2 pi i kn/N}.
/// data.size() must be a power of two.
void fft_radix2(std::span<Complex> data);

/// Forward DFT of a real sequence. Power-of-two lengths go through
/// fft_radix2(); everything else falls back to the direct O(N^2) sum.
std::vector<Complex> dft(std::span<const double> samples);

}  // namespace growca
