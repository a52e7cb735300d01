#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <span>

#include "growca/automaton.hpp"

namespace growca {

/// Time-by-cell image of a growth history. Column x is snapshot x, row y is
/// cell y (cell 0 at the top). Stored row-major.
struct GrowthImage {
  std::size_t width = 0;
  std::size_t height = 0;
  Bytes pixels;

  std::uint8_t at(std::size_t x, std::size_t y) const { return pixels[y * width + x]; }
};

/// Ink is 255 - cell value; cells beyond a snapshot's length are white (255).
/// Snapshots must grow by exactly one cell each.
/// Throws Error{EmptyTrace | NonMonotoneTrace}.
GrowthImage render_growth(std::span<const CAState> trace);
GrowthImage render_growth(std::span<const Bytes> registers);

/// Binary PGM: "P5\n<w> <h>\n255\n" followed by the pixel bytes.
void write_pgm(const GrowthImage& image, std::ostream& out);
/// Throws Error{IoFailure}.
void write_pgm(const GrowthImage& image, const std::filesystem::path& path);

}  // namespace growca
