#include "sobelcs/edge_math.hpp"

#include <algorithm>
#include <cstdlib>

namespace sobelcs {

std::uint32_t isqrt_floor(std::uint32_t n) noexcept {
  // Digit-by-digit (binary restoring) square root.
  std::uint32_t rem = n;
  std::uint32_t root = 0;
  std::uint32_t place = 1u << 30;
  while (place > rem) place >>= 2;
  while (place != 0) {
    if (rem >= root + place) {
      rem -= root + place;
      root = (root >> 1) + place;
    } else {
      root >>= 1;
    }
    place >>= 2;
  }
  return root;
}

std::uint8_t magnitude(GradientSample g, Norm norm) noexcept {
  const auto ax = static_cast<std::uint32_t>(std::abs(g.gx));
  const auto ay = static_cast<std::uint32_t>(std::abs(g.gy));
  const std::uint32_t m =
      norm == Norm::kL1 ? ax + ay : isqrt_floor(ax * ax + ay * ay);
  return static_cast<std::uint8_t>(std::min<std::uint32_t>(m, 255u));
}

std::uint8_t edge_value(GradientSample g, const EdgeParams& params) noexcept {
  const std::uint8_t m = magnitude(g, params.norm);
  return params.threshold ? threshold(m, *params.threshold) : m;
}

std::string_view to_string(Norm norm) noexcept {
  return norm == Norm::kL1 ? "l1" : "l2";
}

std::optional<Norm> parse_norm(std::string_view text) noexcept {
  if (text == "l2") return Norm::kL2;
  if (text == "l1") return Norm::kL1;
  return std::nullopt;
}

}  // namespace sobelcs
