#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string_view>

#include "sobelcs/bit_word.hpp"
#include "sobelcs/compressor.hpp"
#include "sobelcs/pixel_cache.hpp"

namespace sobelcs {

// The four datapath designs, from plain adder tree to the full design.
enum class Variant : std::uint8_t {
  kAdderTree,
  kSeparated,
  kCompressor,
  kLookaheadCompressor,
};

inline constexpr std::array<Variant, 4> kAllVariants = {
    Variant::kAdderTree, Variant::kSeparated, Variant::kCompressor,
    Variant::kLookaheadCompressor};

std::string_view to_string(Variant variant) noexcept;
std::optional<Variant> parse_variant(std::string_view text) noexcept;
inline std::ostream& operator<<(std::ostream& os, Variant v) { return os << to_string(v); }

inline constexpr int kPixelBits = 8;
inline constexpr int kDatapathWidth = 11;    // +-1020
inline constexpr int kColumnSumBits = 10;    // c + 2f + i <= 1020
inline constexpr int kColumnDiffBits = 9;    // i - c in [-255, 255]

/// Cached column results reused by the next two windows of the same row.
/// Index 0 is the previous cycle, index 1 two cycles ago.
struct SideCaches {
  std::array<BitWord, 2> colsum = {BitWord::zero(kColumnSumBits),
                                   BitWord::zero(kColumnSumBits)};
  std::array<BitWord, 2> coldiff = {
      BitWord::zero(kColumnDiffBits, Signedness::kTwosComplement),
      BitWord::zero(kColumnDiffBits, Signedness::kTwosComplement)};
  int colsum_depth = 0;
  int coldiff_depth = 0;

  void reset() { *this = SideCaches{}; }
};

// Counts operand reads made by one datapath evaluation.
struct AccessLog {
  int window_reads = 0;
  int cache_reads = 0;

  int total() const noexcept { return window_reads + cache_reads; }
};

struct DatapathHooks {
  AccessLog* access_log = nullptr;
  // XORed into the Gx compressor's output sum word (into the result word for
  // variants without a compressor). Test hook for fault injection.
  std::uint32_t gx_sum_fault = 0;
};

/// Intermediate words of one Gx or Gy evaluation.
struct StageTrace {
  std::optional<CsPair> first_layer;   // P2PP:PP output
  std::optional<CsPair> second_layer;  // PPN:PP output (Gx only)
  std::optional<BitWord> cached;       // u or v shifted into the side cache
  std::optional<BitWord> gradient;     // 11-bit two's complement
};

// One clock of the x-direction path. The window's right column (c, f, i)
// must be a vertical image triple. Emits
//   gx = (c + 2f + i) - (a + 2d + g)
// once the column-sum chain holds two earlier columns of the current row.
StageTrace gx_datapath(const Window3x3& window, SideCaches& caches,
                       Variant variant, const DatapathHooks& hooks = {});

// One clock of the y-direction path:
//   gy = (g + 2h + i) - (a + 2b + c)
// built from column differences v = i - c of this and the two prior columns.
StageTrace gy_datapath(const Window3x3& window, SideCaches& caches,
                       Variant variant, const DatapathHooks& hooks = {});

// Final carry-propagate adder used by a variant (ripple or split look-ahead).
BitWord final_add(Variant variant, const BitWord& a, const BitWord& b,
                  bool carry_in = false);

}  // namespace sobelcs
