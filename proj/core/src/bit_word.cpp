#include "sobelcs/bit_word.hpp"

#include <string>

#include "sobelcs/errors.hpp"

namespace sobelcs {

void BitWord::check_width(int width) {
  if (width < 1 || width > kMaxWidth) {
    throw ContractError("BitWord width " + std::to_string(width) +
                        " outside 1.." + std::to_string(kMaxWidth));
  }
}

BitWord BitWord::from_unsigned(std::uint64_t value, int width,
                               Signedness signedness) {
  check_width(width);
  return BitWord(static_cast<std::uint32_t>(value) & mask(width), width,
                 signedness);
}

BitWord BitWord::from_signed(std::int64_t value, int width) {
  check_width(width);
  return BitWord(static_cast<std::uint32_t>(static_cast<std::uint64_t>(value)) &
                     mask(width),
                 width, Signedness::kTwosComplement);
}

BitWord BitWord::zero(int width, Signedness signedness) {
  check_width(width);
  return BitWord(0u, width, signedness);
}

void BitWord::set_bit(int index, bool value) {
  if (index < 0 || index >= width_) {
    throw ContractError("BitWord::set_bit index " + std::to_string(index) +
                        " outside width " + std::to_string(width_));
  }
  const std::uint32_t m = 1u << index;
  bits_ = value ? (bits_ | m) : (bits_ & ~m);
}

std::int32_t BitWord::to_signed() const noexcept {
  if (width_ == 32) return static_cast<std::int32_t>(bits_);
  const std::uint32_t sign = 1u << (width_ - 1);
  const auto v = static_cast<std::int64_t>(bits_);
  return static_cast<std::int32_t>((bits_ & sign) ? v - (std::int64_t{1} << width_)
                                                  : v);
}

std::int64_t BitWord::value() const noexcept {
  return signedness_ == Signedness::kTwosComplement
             ? std::int64_t{to_signed()}
             : std::int64_t{to_unsigned()};
}

BitWord BitWord::as_signed() const noexcept {
  return BitWord(bits_, width_, Signedness::kTwosComplement);
}

BitWord BitWord::as_unsigned() const noexcept {
  return BitWord(bits_, width_, Signedness::kUnsigned);
}

BitWord BitWord::resized(int new_width) const {
  check_width(new_width);
  std::uint32_t out = bits_;
  if (new_width > width_ && signedness_ == Signedness::kTwosComplement &&
      bit(width_ - 1)) {
    out |= mask(new_width) & ~mask(width_);
  }
  return BitWord(out & mask(new_width), new_width, signedness_);
}

BitWord BitWord::shifted_left(int amount) const {
  if (amount < 0) throw ContractError("BitWord::shifted_left negative amount");
  if (amount >= width_) return BitWord(0u, width_, signedness_);
  return BitWord((bits_ << amount) & mask(width_), width_, signedness_);
}

BitWord BitWord::operator~() const noexcept {
  return BitWord(~bits_ & mask(width_), width_, signedness_);
}

BitWord BitWord::operator^(const BitWord& other) const {
  require_same_width("BitWord::operator^", *this, other);
  return BitWord(bits_ ^ other.bits_, width_, signedness_);
}

std::string BitWord::to_binary() const {
  std::string out = "0b";
  out.reserve(static_cast<std::size_t>(width_) + 2);
  for (int i = width_ - 1; i >= 0; --i) out.push_back(bit(i) ? '1' : '0');
  return out;
}

void require_same_width(const char* op, const BitWord& a, const BitWord& b) {
  if (a.width() != b.width()) {
    throw ContractError(std::string(op) + ": width mismatch (" +
                        std::to_string(a.width()) + " vs " +
                        std::to_string(b.width()) + ")");
  }
}

void require_same_width(const char* op, const BitWord& a, const BitWord& b,
                        const BitWord& c) {
  require_same_width(op, a, b);
  require_same_width(op, a, c);
}

}  // namespace sobelcs
