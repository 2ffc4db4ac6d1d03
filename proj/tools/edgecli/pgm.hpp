#pragma once

#include <filesystem>
#include <istream>
#include <ostream>
#include <stdexcept>

#include "sobelcs/image.hpp"

namespace edgecli {

// Malformed or unsupported PGM content.
class PgmFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// File could not be opened, read or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Binary P5, maxval 255 only. Any ASCII whitespace separates header tokens
// and '#' starts a comment that runs to end of line.
sobelcs::Image read_pgm(std::istream& in);
sobelcs::Image read_pgm(const std::filesystem::path& path);

// Writes "P5\n<w> <h>\n255\n" followed by the raw row-major bytes.
void write_pgm(std::ostream& out, const sobelcs::Image& image);
void write_pgm(const std::filesystem::path& path, const sobelcs::Image& image);

}  // namespace edgecli
