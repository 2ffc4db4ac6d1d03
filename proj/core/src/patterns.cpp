#include "sobelcs/patterns.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace sobelcs::patterns {

Image random_image(int width, int height, std::uint64_t seed, std::uint64_t frame) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(frame), static_cast<std::uint32_t>(frame >> 32)};
  std::mt19937 rng(seq);
  Image img(width, height);
  for (auto& p : img.data()) p = static_cast<std::uint8_t>(rng() & 0xFFu);
  return img;
}

Image constant_image(int width, int height, std::uint8_t value) {
  return Image(width, height, value);
}

Image vertical_step(int width, int height, int step_col, std::uint8_t low,
                    std::uint8_t high) {
  Image img(width, height);
  for (int r = 0; r < height; ++r)
    for (int c = 0; c < width; ++c) img.at(r, c) = c < step_col ? low : high;
  return img;
}

Image ramp(int width, int height, int step) {
  Image img(width, height);
  for (int r = 0; r < height; ++r)
    for (int c = 0; c < width; ++c)
      img.at(r, c) = static_cast<std::uint8_t>(((r * width + c) * step) & 0xFF);
  return img;
}

Image horizon_image(int width, int height, const HorizonParams& params) {
  std::mt19937 rng(static_cast<std::uint32_t>(params.seed));
  std::normal_distribution<double> noise(0.0, params.noise_sigma);
  Image img(width, height);
  for (int r = 0; r < height; ++r) {
    const double base = r < params.horizon_row ? params.sky : params.ground;
    for (int c = 0; c < width; ++c) {
      const double v = std::round(base + noise(rng));
      img.at(r, c) = static_cast<std::uint8_t>(std::clamp(v, 0.0, 255.0));
    }
  }
  return img;
}

}  // namespace sobelcs::patterns
