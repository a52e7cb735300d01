#include "growca/render.hpp"

#include <fstream>
#include <ostream>
#include <string>

#include "growca/error.hpp"

namespace growca {
namespace {

template <typename Range, typename CellsOf>
GrowthImage render_columns(const Range& columns, CellsOf cells_of) {
  if (columns.empty()) throw Error(Errc::EmptyTrace, "growth trace is empty");
  for (std::size_t t = 1; t < columns.size(); ++t) {
    if (cells_of(columns[t]).size() != cells_of(columns[t - 1]).size() + 1) {
      throw Error(Errc::NonMonotoneTrace,
                  "snapshot " + std::to_string(t) + " does not extend its predecessor by one cell");
    }
  }

  GrowthImage image;
  image.width = columns.size();
  image.height = cells_of(columns.back()).size();
  image.pixels.assign(image.width * image.height, 255);
  for (std::size_t x = 0; x < image.width; ++x) {
    const ByteView cells = cells_of(columns[x]);
    for (std::size_t y = 0; y < cells.size(); ++y) {
      image.pixels[y * image.width + x] = static_cast<std::uint8_t>(255 - cells[y]);
    }
  }
  return image;
}

}  // namespace

GrowthImage render_growth(std::span<const CAState> trace) {
  return render_columns(trace, [](const CAState& s) { return s.cells(); });
}

GrowthImage render_growth(std::span<const Bytes> registers) {
  return render_columns(registers, [](const Bytes& b) { return ByteView(b); });
}

void write_pgm(const GrowthImage& image, std::ostream& out) {
  out << "P5\n" << image.width << ' ' << image.height << "\n255\n";
  out.write(reinterpret_cast<const char*>(image.pixels.data()),
            static_cast<std::streamsize>(image.pixels.size()));
}

void write_pgm(const GrowthImage& image, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(Errc::IoFailure, "cannot open " + path.string() + " for writing");
  write_pgm(image, out);
  out.flush();
  if (!out) throw Error(Errc::IoFailure, "failed writing " + path.string());
}

}  // namespace growca
