#pragma once

#include <cstdint>
#include <string>

namespace sobelcs {

enum class Signedness : std::uint8_t { kUnsigned, kTwosComplement };

/// Fixed-width bit vector, 1 to 32 bits, LSB at index 0.
///
/// Storage is a plain mask-reduced word; signedness only changes how value()
/// interprets it. Every arithmetic cell in the datapath works on BitWords one
/// bit at a time so the simulated logic mirrors the hardware bit-slices.
class BitWord {
 public:
  static constexpr int kMaxWidth = 32;

  BitWord() = default;

  // Keeps the low `width` bits of `value` (modular reduction).
  static BitWord from_unsigned(std::uint64_t value, int width,
                               Signedness signedness = Signedness::kUnsigned);
  static BitWord from_signed(std::int64_t value, int width);
  static BitWord zero(int width, Signedness signedness = Signedness::kUnsigned);

  int width() const noexcept { return width_; }
  Signedness signedness() const noexcept { return signedness_; }

  // Out-of-range indices read as 0, so y_{-1} style references are free.
  bool bit(int index) const noexcept {
    return index >= 0 && index < width_ && ((bits_ >> index) & 1u) != 0;
  }
  void set_bit(int index, bool value);

  std::uint32_t raw() const noexcept { return bits_; }
  std::uint32_t to_unsigned() const noexcept { return bits_; }
  std::int32_t to_signed() const noexcept;
  // Interpretation according to signedness().
  std::int64_t value() const noexcept;

  BitWord as_signed() const noexcept;
  BitWord as_unsigned() const noexcept;

  // Zero- or sign-extends according to signedness(); truncates when narrower.
  BitWord resized(int new_width) const;
  BitWord shifted_left(int amount) const;

  BitWord operator~() const noexcept;
  BitWord operator^(const BitWord& other) const;

  // MSB-first with a 0b prefix, e.g. 0b0101.
  std::string to_binary() const;

  friend bool operator==(const BitWord& lhs, const BitWord& rhs) noexcept {
    return lhs.width_ == rhs.width_ && lhs.bits_ == rhs.bits_;
  }

  static std::uint32_t mask(int width) noexcept {
    return width >= 32 ? 0xFFFFFFFFu : ((1u << width) - 1u);
  }

 private:
  BitWord(std::uint32_t bits, int width, Signedness signedness) noexcept
      : bits_(bits), width_(width), signedness_(signedness) {}

  static void check_width(int width);

  std::uint32_t bits_ = 0;
  int width_ = 1;
  Signedness signedness_ = Signedness::kUnsigned;
};

// Throws ContractError unless every word has the same width.
void require_same_width(const char* op, const BitWord& a, const BitWord& b);
void require_same_width(const char* op, const BitWord& a, const BitWord& b,
                        const BitWord& c);

}  // namespace sobelcs
