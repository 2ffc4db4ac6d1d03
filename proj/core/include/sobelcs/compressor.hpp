#pragma once

#include <cstdint>

#include "sobelcs/bit_word.hpp"

namespace sobelcs {

/// Carry-save pair. The carry word already sits at its weighted positions,
/// so sum + carry (mod 2^width) is the represented value.
struct CsPair {
  BitWord sum;
  BitWord carry;

  int width() const noexcept { return sum.width(); }
  // (sum + carry) mod 2^width, as a plain integer. Not a hardware path.
  std::uint32_t value_mod() const noexcept {
    return (sum.raw() + carry.raw()) & BitWord::mask(sum.width());
  }
};

// First compressor layer. Doubles y by feeding y_{i-1} into column i:
//   sum_i       = x_i ^ y_{i-1} ^ z_i
//   carry_{i+1} = maj(x_i, y_{i-1}, z_i),  carry_0 = 0
// so sum + carry == x + 2y + z (mod 2^w).
CsPair p2pp_compress(const BitWord& x, const BitWord& y, const BitWord& z);

// Second compressor layer. Subtracts z by inverting it and forcing carry_0:
//   sum_i       = ~(x_i ^ y_i ^ z_i)
//   carry_{i+1} = maj(x_i, y_i, ~z_i),     carry_0 = 1
// so sum + carry == x + y - z (mod 2^w).
CsPair ppn_compress(const BitWord& x, const BitWord& y, const BitWord& z);

// Two-level 4:2 compressor: ppn(p2pp(a, b, c), d) == a + 2b + c - d.
CsPair compress_4_2(const BitWord& a, const BitWord& b, const BitWord& c,
                    const BitWord& d);

}  // namespace sobelcs
