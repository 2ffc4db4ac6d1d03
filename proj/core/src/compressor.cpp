#include "sobelcs/compressor.hpp"

namespace sobelcs {
namespace {

constexpr bool majority(bool a, bool b, bool c) noexcept {
  return (a && b) || (a && c) || (b && c);
}

}  // namespace

CsPair p2pp_compress(const BitWord& x, const BitWord& y, const BitWord& z) {
  require_same_width("p2pp_compress", x, y, z);
  const int w = x.width();
  CsPair out{BitWord::zero(w), BitWord::zero(w)};
  for (int i = 0; i < w; ++i) {
    const bool xi = x.bit(i);
    const bool yi = y.bit(i - 1);  // one-bit offset doubles y
    const bool zi = z.bit(i);
    out.sum.set_bit(i, xi ^ yi ^ zi);
    if (i + 1 < w) out.carry.set_bit(i + 1, majority(xi, yi, zi));
  }
  return out;
}

CsPair ppn_compress(const BitWord& x, const BitWord& y, const BitWord& z) {
  require_same_width("ppn_compress", x, y, z);
  const int w = x.width();
  CsPair out{BitWord::zero(w), BitWord::zero(w)};
  out.carry.set_bit(0, true);
  for (int i = 0; i < w; ++i) {
    const bool xi = x.bit(i);
    const bool yi = y.bit(i);
    const bool zi = z.bit(i);
    out.sum.set_bit(i, !(xi ^ yi ^ zi));
    if (i + 1 < w) out.carry.set_bit(i + 1, majority(xi, yi, !zi));
  }
  return out;
}

CsPair compress_4_2(const BitWord& a, const BitWord& b, const BitWord& c,
                    const BitWord& d) {
  require_same_width("compress_4_2", a, b, c);
  require_same_width("compress_4_2", a, d);
  const CsPair interim = p2pp_compress(a, b, c);
  return ppn_compress(interim.sum, interim.carry, d);
}

}  // namespace sobelcs
