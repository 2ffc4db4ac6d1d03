#include "sobelcs/datapath.hpp"

#include <vector>

#include "sobelcs/adder.hpp"
#include "sobelcs/errors.hpp"
#include "sobelcs/golden.hpp"

namespace sobelcs {

std::string_view to_string(Variant variant) noexcept {
  switch (variant) {
    case Variant::kAdderTree: return "adder-tree";
    case Variant::kSeparated: return "separated";
    case Variant::kCompressor: return "compressor";
    case Variant::kLookaheadCompressor: return "lookahead-compressor";
  }
  return "unknown";
}

std::optional<Variant> parse_variant(std::string_view text) noexcept {
  for (Variant v : kAllVariants)
    if (to_string(v) == text) return v;
  return std::nullopt;
}

BitWord final_add(Variant variant, const BitWord& a, const BitWord& b,
                  bool carry_in) {
  return variant == Variant::kLookaheadCompressor
             ? lookahead_add(a, b, carry_in).sum
             : ripple_add(a, b, carry_in).sum;
}

namespace {

class OperandReader {
 public:
  OperandReader(const Window3x3& window, AccessLog* log)
      : window_(window), log_(log) {}

  BitWord pixel(int row, int col, int width = kDatapathWidth) const {
    if (log_) ++log_->window_reads;
    return BitWord::from_unsigned(window_.at(row, col), width);
  }
  BitWord cached(const BitWord& word) const {
    if (log_) ++log_->cache_reads;
    return word;
  }

 private:
  const Window3x3& window_;
  AccessLog* log_;
};

BitWord negate(const BitWord& x) {
  return ripple_add(~x, BitWord::zero(x.width()), true).sum;
}

// Coefficient in {-2..2} applied with shifts and two's-complement negation.
BitWord scale(const BitWord& x, int coefficient) {
  switch (coefficient) {
    case 0: return BitWord::zero(x.width());
    case 1: return x;
    case 2: return x.shifted_left(1);
    case -1: return negate(x);
    case -2: return negate(x.shifted_left(1));
    default:
      throw ContractError("adder tree supports coefficients in [-2, 2]");
  }
}

// Unoptimised 9-leaf weighted tree: 8 two-operand ripple adds.
BitWord adder_tree(const OperandReader& in, const golden::Kernel3x3& kernel) {
  std::vector<BitWord> level;
  level.reserve(9);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) level.push_back(scale(in.pixel(r, c), kernel.at(r, c)));
  while (level.size() > 1) {
    std::vector<BitWord> next;
    for (std::size_t k = 0; k + 1 < level.size(); k += 2)
      next.push_back(ripple_add(level[k], level[k + 1]).sum);
    if (level.size() % 2 == 1) next.push_back(level.back());
    level = std::move(next);
  }
  return level.front().as_signed();
}

void shift_chain(std::array<BitWord, 2>& chain, int& depth, const BitWord& in) {
  chain[1] = chain[0];
  chain[0] = in;
  if (depth < 2) ++depth;
}

}  // namespace

StageTrace gx_datapath(const Window3x3& window, SideCaches& caches,
                       Variant variant, const DatapathHooks& hooks) {
  const OperandReader in(window, hooks.access_log);
  const bool primed = caches.colsum_depth == 2;
  StageTrace t;

  if (variant == Variant::kAdderTree) {
    // No side cache; the chain depth still tracks row-start priming.
    shift_chain(caches.colsum, caches.colsum_depth, BitWord::zero(kColumnSumBits));
    if (primed) {
      const BitWord g = adder_tree(in, golden::sobel_kernels().first);
      t.gradient = (g ^ BitWord::from_unsigned(hooks.gx_sum_fault, kDatapathWidth))
                       .as_signed();
    }
    return t;
  }

  const BitWord c = in.pixel(0, 2);
  const BitWord f = in.pixel(1, 2);
  const BitWord i = in.pixel(2, 2);

  BitWord u_now;
  std::optional<CsPair> first;
  if (variant == Variant::kSeparated) {
    u_now = ripple_add(ripple_add(c, f.shifted_left(1)).sum, i).sum;
  } else {
    first = p2pp_compress(c, f, i);
    // Start-of-pipeline add that turns the interim pair into a cacheable sum.
    u_now = final_add(variant, first->sum, first->carry);
  }

  if (primed) {
    const BitWord u_old = in.cached(caches.colsum[1]).resized(kDatapathWidth);
    BitWord gx;
    if (variant == Variant::kSeparated) {
      gx = ripple_add(u_now, ~u_old, true).sum ^
           BitWord::from_unsigned(hooks.gx_sum_fault, kDatapathWidth);
    } else {
      CsPair second = ppn_compress(first->sum, first->carry, u_old);
      second.sum = second.sum ^ BitWord::from_unsigned(hooks.gx_sum_fault,
                                                       kDatapathWidth);
      t.second_layer = second;
      gx = final_add(variant, second.sum, second.carry);
    }
    t.gradient = gx.as_signed();
  }

  t.first_layer = first;
  t.cached = u_now.resized(kColumnSumBits);
  shift_chain(caches.colsum, caches.colsum_depth, *t.cached);
  return t;
}

StageTrace gy_datapath(const Window3x3& window, SideCaches& caches,
                       Variant variant, const DatapathHooks& hooks) {
  const OperandReader in(window, hooks.access_log);
  const bool primed = caches.coldiff_depth == 2;
  StageTrace t;

  if (variant == Variant::kAdderTree) {
    shift_chain(caches.coldiff, caches.coldiff_depth,
                BitWord::zero(kColumnDiffBits, Signedness::kTwosComplement));
    if (primed) t.gradient = adder_tree(in, golden::sobel_kernels().second);
    return t;
  }

  // v = i - c at 9 bits: i + ~c + 1.
  const BitWord i9 = in.pixel(2, 2, kColumnDiffBits);
  const BitWord c9 = in.pixel(0, 2, kColumnDiffBits);
  const Variant sub_adder =
      variant == Variant::kLookaheadCompressor ? variant : Variant::kCompressor;
  const BitWord v_now = final_add(sub_adder, i9, ~c9, true).as_signed();

  if (primed) {
    const BitWord v_now11 = v_now.resized(kDatapathWidth);
    const BitWord v_prev = in.cached(caches.coldiff[0]).resized(kDatapathWidth);
    const BitWord v_prev2 = in.cached(caches.coldiff[1]).resized(kDatapathWidth);
    BitWord gy;
    if (variant == Variant::kSeparated) {
      gy = ripple_add(ripple_add(v_now11, v_prev.shifted_left(1)).sum, v_prev2).sum;
    } else {
      const CsPair pair = p2pp_compress(v_now11, v_prev, v_prev2);
      t.first_layer = pair;
      gy = final_add(variant, pair.sum, pair.carry);
    }
    t.gradient = gy.as_signed();
  }

  t.cached = v_now;
  shift_chain(caches.coldiff, caches.coldiff_depth, v_now);
  return t;
}

}  // namespace sobelcs
