#include "sobelcs/adder.hpp"

namespace sobelcs {
namespace {

// Ripples bits [begin, end) into `sum`; returns the carry out of bit end-1.
bool ripple_range(const BitWord& a, const BitWord& b, int begin, int end,
                  bool carry, BitWord& sum) {
  for (int i = begin; i < end; ++i) {
    const bool ai = a.bit(i);
    const bool bi = b.bit(i);
    sum.set_bit(i, ai ^ bi ^ carry);
    carry = (ai && bi) || (carry && (ai ^ bi));
  }
  return carry;
}

}  // namespace

AddResult ripple_add(const BitWord& a, const BitWord& b, bool carry_in) {
  require_same_width("ripple_add", a, b);
  AddResult out{BitWord::zero(a.width(), a.signedness()), false};
  out.carry_out = ripple_range(a, b, 0, a.width(), carry_in, out.sum);
  return out;
}

LookaheadSplit lookahead_split(const BitWord& a, const BitWord& b,
                               bool carry_in) {
  require_same_width("lookahead_split", a, b);
  LookaheadSplit s;
  const int w = a.width();
  if (w < 4) return s;
  s.midpoint = (w + 1) / 2;
  const int hi = s.midpoint - 1;
  const int lo = s.midpoint - 2;

  BitWord scratch = BitWord::zero(w);
  s.carry_into_group = ripple_range(a, b, 0, lo, carry_in, scratch);

  const bool g_hi = a.bit(hi) && b.bit(hi);
  const bool p_hi = a.bit(hi) ^ b.bit(hi);
  const bool g_lo = a.bit(lo) && b.bit(lo);
  const bool p_lo = a.bit(lo) ^ b.bit(lo);
  s.generate = g_hi || (p_hi && g_lo);
  s.propagate = p_hi && p_lo;
  s.predicted_carry = s.generate || (s.propagate && s.carry_into_group);
  return s;
}

AddResult lookahead_add(const BitWord& a, const BitWord& b, bool carry_in) {
  require_same_width("lookahead_add", a, b);
  const int w = a.width();
  if (w < 4) return ripple_add(a, b, carry_in);

  const LookaheadSplit split = lookahead_split(a, b, carry_in);
  AddResult out{BitWord::zero(w, a.signedness()), false};
  // The two halves share no signal except C_m, which comes from the
  // look-ahead cell rather than the lower half's carry out.
  ripple_range(a, b, 0, split.midpoint, carry_in, out.sum);
  out.carry_out =
      ripple_range(a, b, split.midpoint, w, split.predicted_carry, out.sum);
  return out;
}

}  // namespace sobelcs
