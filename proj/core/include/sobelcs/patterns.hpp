#pragma once

#include <cstdint>

#include "sobelcs/image.hpp"

// Deterministic synthetic frames shared by the CLI, tests and benchmarks.
namespace sobelcs::patterns {

// Pixels drawn from std::mt19937 seeded with (seed, frame).
Image random_image(int width, int height, std::uint64_t seed, std::uint64_t frame = 0);

Image constant_image(int width, int height, std::uint8_t value);

// Columns < step_col are `low`, the rest `high`.
Image vertical_step(int width, int height, int step_col, std::uint8_t low = 0,
                    std::uint8_t high = 255);

// pixel(r, c) = (r * width + c) * step, wrapping at 256.
Image ramp(int width, int height, int step = 1);

struct HorizonParams {
  int horizon_row = 0;        // first ground row
  std::uint8_t sky = 40;
  std::uint8_t ground = 200;
  double noise_sigma = 8.0;
  std::uint64_t seed = 1;
};
// Dark sky over bright ground with clamped additive Gaussian noise.
Image horizon_image(int width, int height, const HorizonParams& params);

}  // namespace sobelcs::patterns
