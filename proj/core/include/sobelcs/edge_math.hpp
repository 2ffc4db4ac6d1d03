#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

namespace sobelcs {

enum class Norm : std::uint8_t { kL2, kL1 };
enum class BorderPolicy : std::uint8_t { kZeroFill };

struct EdgeParams {
  Norm norm = Norm::kL2;
  std::optional<std::uint8_t> threshold;
  BorderPolicy border = BorderPolicy::kZeroFill;
};

struct GradientSample {
  std::int32_t gx = 0;
  std::int32_t gy = 0;

  friend bool operator==(const GradientSample&, const GradientSample&) = default;
};

// Largest bound on |gx|, |gy| for 8-bit input: 4 * 255.
inline constexpr std::int32_t kMaxGradient = 1020;

// floor(sqrt(n)), exact for the full 32-bit range.
std::uint32_t isqrt_floor(std::uint32_t n) noexcept;

// L2: floor(sqrt(gx^2 + gy^2)); L1: |gx| + |gy|. Both clamp to 255.
std::uint8_t magnitude(GradientSample g, Norm norm = Norm::kL2) noexcept;

// Inclusive: m >= t maps to 255.
constexpr std::uint8_t threshold(std::uint8_t m, std::uint8_t t) noexcept {
  return m >= t ? 255 : 0;
}

// magnitude followed by the optional threshold.
std::uint8_t edge_value(GradientSample g, const EdgeParams& params) noexcept;

std::string_view to_string(Norm norm) noexcept;
std::optional<Norm> parse_norm(std::string_view text) noexcept;

}  // namespace sobelcs
