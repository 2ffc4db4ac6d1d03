#include "edgecli/pgm.hpp"

#include <cctype>
#include <fstream>
#include <iterator>
#include <limits>
#include <string>

namespace edgecli {
namespace {

void skip_space_and_comments(std::istream& in) {
  for (;;) {
    const int ch = in.peek();
    if (ch == std::char_traits<char>::eof()) return;
    if (ch == '#') {
      in.ignore(std::numeric_limits<std::streamsize>::max(), '\n');
    } else if (std::isspace(ch)) {
      in.get();
    } else {
      return;
    }
  }
}

long read_header_int(std::istream& in, const char* what) {
  skip_space_and_comments(in);
  std::string digits;
  while (std::isdigit(in.peek())) digits.push_back(static_cast<char>(in.get()));
  if (digits.empty() || digits.size() > 9) {
    throw PgmFormatError(std::string("PGM: bad ") + what);
  }
  return std::stol(digits);
}

}  // namespace

sobelcs::Image read_pgm(std::istream& in) {
  char magic[2] = {};
  if (!in.read(magic, 2) || magic[0] != 'P' || magic[1] != '5') {
    throw PgmFormatError("PGM: missing P5 magic");
  }
  const long width = read_header_int(in, "width");
  const long height = read_header_int(in, "height");
  const long maxval = read_header_int(in, "maxval");
  if (width <= 0 || height <= 0) throw PgmFormatError("PGM: zero dimension");
  if (maxval != 255) {
    throw PgmFormatError("PGM: maxval must be 255, got " + std::to_string(maxval));
  }
  // Exactly one whitespace byte separates the header from the raster.
  if (!std::isspace(in.get())) throw PgmFormatError("PGM: no separator after maxval");

  const auto count = static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
  std::vector<std::uint8_t> data(count);
  in.read(reinterpret_cast<char*>(data.data()), static_cast<std::streamsize>(count));
  if (static_cast<std::size_t>(in.gcount()) != count) {
    throw PgmFormatError("PGM: truncated raster (" + std::to_string(in.gcount()) +
                         " of " + std::to_string(count) + " bytes)");
  }
  if (in.peek() != std::char_traits<char>::eof()) {
    throw PgmFormatError("PGM: trailing data after raster");
  }
  return sobelcs::Image(static_cast<int>(width), static_cast<int>(height), std::move(data));
}

sobelcs::Image read_pgm(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  return read_pgm(in);
}

void write_pgm(std::ostream& out, const sobelcs::Image& image) {
  out << "P5\n" << image.width() << ' ' << image.height() << "\n255\n";
  out.write(reinterpret_cast<const char*>(image.data().data()),
            static_cast<std::streamsize>(image.size()));
}

void write_pgm(const std::filesystem::path& path, const sobelcs::Image& image) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  write_pgm(out, image);
  out.flush();
  if (!out) throw IoError("write failed: " + path.string());
}

}  // namespace edgecli
