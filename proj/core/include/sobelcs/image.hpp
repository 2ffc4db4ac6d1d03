#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "sobelcs/errors.hpp"

namespace sobelcs {

/// Row-major 2D grid. Image (8-bit pixels), EdgeImage and SignedMap
/// (gradient field) are all instances.
template <class T>
class Grid {
 public:
  using value_type = T;

  Grid() = default;
  Grid(int width, int height, T fill = T{}) : width_(width), height_(height) {
    if (width < 0 || height < 0) throw ImageError("negative grid dimensions");
    data_.assign(static_cast<std::size_t>(width) * static_cast<std::size_t>(height),
                 fill);
  }
  Grid(int width, int height, std::vector<T> data)
      : width_(width), height_(height), data_(std::move(data)) {
    if (width < 0 || height < 0) throw ImageError("negative grid dimensions");
    if (data_.size() !=
        static_cast<std::size_t>(width) * static_cast<std::size_t>(height)) {
      throw ImageError("grid data size does not match width*height");
    }
  }

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }
  std::size_t size() const noexcept { return data_.size(); }

  T& at(int row, int col) { return data_[index(row, col)]; }
  const T& at(int row, int col) const { return data_[index(row, col)]; }

  std::vector<T>& data() noexcept { return data_; }
  const std::vector<T>& data() const noexcept { return data_; }

  friend bool operator==(const Grid&, const Grid&) = default;

 private:
  std::size_t index(int row, int col) const noexcept {
    return static_cast<std::size_t>(row) * static_cast<std::size_t>(width_) +
           static_cast<std::size_t>(col);
  }

  int width_ = 0;
  int height_ = 0;
  std::vector<T> data_;
};

using Image = Grid<std::uint8_t>;
using EdgeImage = Grid<std::uint8_t>;
using SignedMap = Grid<std::int32_t>;

template <class T>
Grid<T> transposed(const Grid<T>& g) {
  Grid<T> out(g.height(), g.width());
  for (int r = 0; r < g.height(); ++r)
    for (int c = 0; c < g.width(); ++c) out.at(c, r) = g.at(r, c);
  return out;
}

inline void require_convolvable(const char* op, int width, int height) {
  if (width < 3 || height < 3) {
    throw ImageError(std::string(op) + ": image must be at least 3x3, got " +
                     std::to_string(width) + "x" + std::to_string(height));
  }
}

}  // namespace sobelcs
