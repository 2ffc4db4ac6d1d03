#pragma once

#include <array>
#include <utility>

#include "sobelcs/edge_math.hpp"
#include "sobelcs/image.hpp"

// Reference Sobel implementation: plain wide-integer 2D correlation, no
// bit-level modelling. Every datapath variant is checked against this.
namespace sobelcs::golden {

class Kernel3x3 {
 public:
  static constexpr int kMinCoefficient = -8;
  static constexpr int kMaxCoefficient = 8;

  explicit Kernel3x3(const std::array<int, 9>& coefficients);

  // Outer product col * row^T.
  static Kernel3x3 outer(const std::array<int, 3>& col,
                         const std::array<int, 3>& row);

  int at(int row, int col) const noexcept { return k_[static_cast<std::size_t>(row * 3 + col)]; }
  const std::array<int, 9>& coefficients() const noexcept { return k_; }
  int sum() const noexcept;

  friend bool operator==(const Kernel3x3&, const Kernel3x3&) = default;

 private:
  std::array<int, 9> k_;
};

// (S_x, S_y).
std::pair<Kernel3x3, Kernel3x3> sobel_kernels();

// Sliding dot product (correlation, no kernel flip) over every interior
// pixel; the one-pixel border is zero.
SignedMap convolve2d(const Image& image, const Kernel3x3& kernel);
SignedMap convolve2d(const SignedMap& map, const Kernel3x3& kernel);

enum class PassOrder { kColumnsFirst, kRowsFirst };

// Applies `col` vertically and `row` horizontally, in the given order.
// Equal to convolve2d with Kernel3x3::outer(col, row).
SignedMap separable_convolve(const Image& image, const std::array<int, 3>& col,
                             const std::array<int, 3>& row,
                             PassOrder order = PassOrder::kColumnsFirst);

struct GradientMaps {
  SignedMap gx;
  SignedMap gy;
};
GradientMaps sobel_gradients(const Image& image);

EdgeImage sobel_golden(const Image& image, const EdgeParams& params = {});

// Multiplications plus additions for an n x n convolution: 2n^2 - 1.
long long op_count(int n);

}  // namespace sobelcs::golden
