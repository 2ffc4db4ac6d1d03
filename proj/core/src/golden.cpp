#include "sobelcs/golden.hpp"

#include <numeric>
#include <string>

namespace sobelcs::golden {

Kernel3x3::Kernel3x3(const std::array<int, 9>& coefficients) : k_(coefficients) {
  for (int c : k_) {
    if (c < kMinCoefficient || c > kMaxCoefficient) {
      throw ContractError("kernel coefficient " + std::to_string(c) +
                          " outside [-8, 8]");
    }
  }
}

Kernel3x3 Kernel3x3::outer(const std::array<int, 3>& col,
                           const std::array<int, 3>& row) {
  std::array<int, 9> k{};
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) k[r * 3 + c] = col[r] * row[c];
  return Kernel3x3(k);
}

int Kernel3x3::sum() const noexcept {
  return std::accumulate(k_.begin(), k_.end(), 0);
}

std::pair<Kernel3x3, Kernel3x3> sobel_kernels() {
  return {Kernel3x3({-1, 0, 1,
                     -2, 0, 2,
                     -1, 0, 1}),
          Kernel3x3({-1, -2, -1,
                      0,  0,  0,
                      1,  2,  1})};
}

namespace {

template <class T>
SignedMap correlate(const Grid<T>& in, const Kernel3x3& kernel) {
  require_convolvable("convolve2d", in.width(), in.height());
  SignedMap out(in.width(), in.height(), 0);
  for (int r = 1; r + 1 < in.height(); ++r) {
    for (int c = 1; c + 1 < in.width(); ++c) {
      long long acc = 0;
      for (int kr = 0; kr < 3; ++kr)
        for (int kc = 0; kc < 3; ++kc)
          acc += static_cast<long long>(kernel.at(kr, kc)) *
                 static_cast<long long>(in.at(r - 1 + kr, c - 1 + kc));
      out.at(r, c) = static_cast<std::int32_t>(acc);
    }
  }
  return out;
}

// 1D pass over the full grid; positions without a complete 3-tap support
// are left at zero.
SignedMap vertical_pass(const SignedMap& in, const std::array<int, 3>& taps) {
  SignedMap out(in.width(), in.height(), 0);
  for (int r = 1; r + 1 < in.height(); ++r)
    for (int c = 0; c < in.width(); ++c)
      out.at(r, c) = taps[0] * in.at(r - 1, c) + taps[1] * in.at(r, c) +
                     taps[2] * in.at(r + 1, c);
  return out;
}

SignedMap horizontal_pass(const SignedMap& in, const std::array<int, 3>& taps) {
  SignedMap out(in.width(), in.height(), 0);
  for (int r = 0; r < in.height(); ++r)
    for (int c = 1; c + 1 < in.width(); ++c)
      out.at(r, c) = taps[0] * in.at(r, c - 1) + taps[1] * in.at(r, c) +
                     taps[2] * in.at(r, c + 1);
  return out;
}

SignedMap widen(const Image& image) {
  SignedMap out(image.width(), image.height(), 0);
  for (std::size_t i = 0; i < image.size(); ++i) out.data()[i] = image.data()[i];
  return out;
}

void zero_border(SignedMap& map) {
  for (int r = 0; r < map.height(); ++r) {
    for (int c = 0; c < map.width(); ++c) {
      if (r == 0 || c == 0 || r + 1 == map.height() || c + 1 == map.width())
        map.at(r, c) = 0;
    }
  }
}

}  // namespace

SignedMap convolve2d(const Image& image, const Kernel3x3& kernel) {
  return correlate(image, kernel);
}

SignedMap convolve2d(const SignedMap& map, const Kernel3x3& kernel) {
  return correlate(map, kernel);
}

SignedMap separable_convolve(const Image& image, const std::array<int, 3>& col,
                             const std::array<int, 3>& row, PassOrder order) {
  require_convolvable("separable_convolve", image.width(), image.height());
  const SignedMap wide = widen(image);
  SignedMap out = order == PassOrder::kColumnsFirst
                      ? horizontal_pass(vertical_pass(wide, col), row)
                      : vertical_pass(horizontal_pass(wide, row), col);
  zero_border(out);
  return out;
}

GradientMaps sobel_gradients(const Image& image) {
  const auto [sx, sy] = sobel_kernels();
  return {convolve2d(image, sx), convolve2d(image, sy)};
}

EdgeImage sobel_golden(const Image& image, const EdgeParams& params) {
  require_convolvable("sobel_golden", image.width(), image.height());
  const GradientMaps g = sobel_gradients(image);
  EdgeImage out(image.width(), image.height(), 0);
  for (int r = 1; r + 1 < image.height(); ++r)
    for (int c = 1; c + 1 < image.width(); ++c)
      out.at(r, c) = edge_value({g.gx.at(r, c), g.gy.at(r, c)}, params);
  return out;
}

long long op_count(int n) {
  if (n < 1) throw ContractError("op_count: kernel size must be >= 1");
  return 2LL * n * n - 1;
}

}  // namespace sobelcs::golden
