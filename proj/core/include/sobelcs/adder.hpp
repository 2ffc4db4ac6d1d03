#pragma once

#include "sobelcs/bit_word.hpp"

namespace sobelcs {

struct AddResult {
  BitWord sum;
  bool carry_out = false;
};

// Bit-serial ripple-carry adder: sum == a + b + carry_in (mod 2^w), carry_out
// is bit w of the exact sum.
AddResult ripple_add(const BitWord& a, const BitWord& b, bool carry_in = false);

// Split adder with a single look-ahead cell at the midpoint m = ceil(w/2).
//
// The lower half ripples bits 0..m-1. The carry into bit m is predicted from
// the two bits just below the split and the ripple carry entering bit m-2:
//   G   = a[m-1]b[m-1] + (a[m-1]^b[m-1]) a[m-2]b[m-2]
//   P   = (a[m-1]^b[m-1]) (a[m-2]^b[m-2])
//   C_m = G + P C_{m-2}
// and the upper half ripples from C_m independently of the lower half's own
// carry out. Widths below 4 have no room for the 2-bit group and fall back to
// ripple_add. Output is bit-identical to ripple_add for every input.
AddResult lookahead_add(const BitWord& a, const BitWord& b,
                        bool carry_in = false);

// Carry bits of the midpoint cell, exposed for tracing and tests.
struct LookaheadSplit {
  int midpoint = 0;           // m
  bool carry_into_group = false;  // C_{m-2}
  bool generate = false;      // G
  bool propagate = false;     // P
  bool predicted_carry = false;   // C_m
};
LookaheadSplit lookahead_split(const BitWord& a, const BitWord& b,
                               bool carry_in = false);

}  // namespace sobelcs
