#include "sobelcs/resource_model.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstdio>
#include <iomanip>
#include <string>

#include "sobelcs/errors.hpp"

namespace sobelcs::resource {
namespace {

// Calibration. Everything not derivable from the LE mapping rules lives
// here: per-variant control/addressing LEs (one LUT plus one register each)
// and pipeline registers that the fitter places in RAM next to the line
// buffers.
struct Calibration {
  int control_les;
  int ram_pipeline_bits;
};

constexpr Calibration calibration(Variant v) {
  switch (v) {
    case Variant::kAdderTree: return {0, 0};
    case Variant::kSeparated: return {100, 16};
    case Variant::kCompressor: return {56, 0};
    case Variant::kLookaheadCompressor: return {77, 14};
  }
  return {0, 0};
}

constexpr int kAdderTreeLeaves = 9;
constexpr int kAdderTreeAdds = kAdderTreeLeaves - 1;
constexpr int kLesPer42Slice = 3;  // chain init + P2PP + PPN, termination shared
constexpr int kLesPer32Slice = 2;  // chain init + P2PP
constexpr int kLookaheadCellLes = 1;

int ceil_log2(int n) {
  return n <= 1 ? 1 : static_cast<int>(std::bit_width(static_cast<unsigned>(n - 1)));
}

int crossings(int chain_length, int column_height) {
  return chain_length <= 0 ? 0 : (chain_length - 1) / column_height;
}

int ripple_levels(int bits, const DesignParams& p) {
  return bits + p.crossing_penalty * crossings(bits, p.column_height);
}

// Halves the ripple chain and adds one prediction level.
int lookahead_levels(int bits, const DesignParams& p) {
  if (bits < 4) return ripple_levels(bits, p);
  const int half = (bits + 1) / 2;
  return half + kLookaheadCellLes + p.crossing_penalty * crossings(half, p.column_height);
}

int final_levels(Variant v, int bits, const DesignParams& p) {
  return v == Variant::kLookaheadCompressor ? lookahead_levels(bits, p)
                                            : ripple_levels(bits, p);
}

Block adder(std::string name, int bits) {
  return {std::move(name), bits, 0, 0, bits, 1};
}

}  // namespace

void DesignParams::validate() const {
  if (width < 3 || height < 3) throw ContractError("design: W and H must be >= 3");
  if (bits_per_pixel < 1) throw ContractError("design: bits per pixel must be >= 1");
  if (datapath_width < bits_per_pixel + 3)
    throw ContractError("design: datapath width must be >= bits per pixel + 3");
  if (datapath_width > 32) throw ContractError("design: datapath width must be <= 32");
  if (column_height < 1 || crossing_penalty < 0)
    throw ContractError("design: invalid column parameters");
}

std::vector<Block> design_blocks(const DesignParams& p) {
  p.validate();
  const int b = p.bits_per_pixel;
  const int w = p.datapath_width;
  const int col_bits = ceil_log2(p.width);
  const int row_bits = ceil_log2(p.height);
  const Variant v = p.variant;

  std::vector<Block> blocks;
  blocks.push_back({"window registers", 0, 9 * b, 0, 0, 0});
  blocks.push_back({"gradient output registers", 0, 2 * w, 2 * w, 0, 0});
  blocks.push_back({"column counter", col_bits, col_bits, col_bits, col_bits, 1});
  blocks.push_back({"row counter", row_bits, row_bits, row_bits, row_bits, 1});

  const int side_cache_bits = 2 * (b + 2) + 2 * (b + 1);
  switch (v) {
    case Variant::kAdderTree:
      blocks.push_back({"gx adder tree", kAdderTreeAdds * w, 0, 0, w, kAdderTreeAdds});
      blocks.push_back({"gy adder tree", kAdderTreeAdds * w, 0, 0, w, kAdderTreeAdds});
      break;
    case Variant::kSeparated:
      blocks.push_back({"gx column sum adders", 2 * w, 0, 0, w, 2});
      blocks.push_back(adder("gx row difference adder", w));
      blocks.push_back(adder("gy column difference adder", b + 1));
      blocks.push_back({"gy row combine adders", 2 * w, 0, 0, w, 2});
      blocks.push_back({"side caches", 0, side_cache_bits, side_cache_bits, 0, 0});
      blocks.push_back({"stage registers", 0, 2 * w, 2 * w, 0, 0});
      break;
    case Variant::kCompressor:
    case Variant::kLookaheadCompressor:
      blocks.push_back({"gx 4:2 compressor", kLesPer42Slice * w, 0, 0,
                        kLesPer42Slice * w, 1});
      blocks.push_back(adder("gx start-of-pipeline adder", w));
      blocks.push_back(adder("gx final adder", w));
      blocks.push_back(adder("gy column difference adder", b + 1));
      blocks.push_back({"gy 3:2 compressor", kLesPer32Slice * w, 0, 0,
                        kLesPer32Slice * w, 1});
      blocks.push_back(adder("gy final adder", w));
      blocks.push_back({"side caches", 0, side_cache_bits, side_cache_bits, 0, 0});
      if (v == Variant::kLookaheadCompressor) {
        blocks.push_back({"look-ahead cells", 4 * kLookaheadCellLes, 0, 0, 0, 0});
      }
      break;
  }
  const Calibration cal = calibration(v);
  blocks.push_back({"control and addressing", cal.control_les, cal.control_les,
                    cal.control_les, 0, 0});
  return blocks;
}

int critical_path_levels(const DesignParams& p) {
  p.validate();
  const int b = p.bits_per_pixel;
  const int w = p.datapath_width;
  switch (p.variant) {
    case Variant::kAdderTree: {
      const int depth = std::bit_width(static_cast<unsigned>(kAdderTreeLeaves - 1));
      return depth * ripple_levels(w, p);
    }
    case Variant::kSeparated:
      // Column stage (two chained adds) is registered before the row stage.
      return std::max({2 * ripple_levels(w, p), ripple_levels(b + 1, p),
                       ripple_levels(w, p)});
    case Variant::kCompressor:
    case Variant::kLookaheadCompressor: {
      const int gx = kLesPer42Slice + final_levels(p.variant, w, p);
      const int u = kLesPer32Slice + final_levels(p.variant, w, p);
      const int diff = final_levels(p.variant, b + 1, p);
      const int gy = kLesPer32Slice + final_levels(p.variant, w, p);
      return std::max({gx, u, diff, gy});
    }
  }
  return 0;
}

ResourceReport estimate_resources(const DesignParams& p) {
  const std::vector<Block> blocks = design_blocks(p);
  ResourceReport r;
  r.variant = p.variant;
  int packable = 0;
  for (const Block& blk : blocks) {
    r.luts += blk.luts;
    r.logic_registers += blk.registers;
    packable += blk.packable_registers;
    r.column_crossings += blk.chain_count * crossings(blk.chain_length, p.column_height);
  }
  r.total_les = r.luts + r.logic_registers - std::min(packable, r.luts);
  r.dedicated_register_bits =
      2LL * (p.width - 3) * p.bits_per_pixel + calibration(p.variant).ram_pipeline_bits;
  r.critical_path_levels = critical_path_levels(p);
  return r;
}

std::span<const PublishedRow> published_rows() {
  static constexpr std::array<PublishedRow, 7> kRows = {{
      {PublishedDesign::kGumstixDsp, "Gumstix DSP", 43.02, {}, {}, {}, {}},
      {PublishedDesign::kSobelReference, "Sobel reference design", 169.12, 2543, {}, {}, {}},
      {PublishedDesign::kAdderTree, "Adder Tree", 172.83, 258, 223, 115, 8128},
      {PublishedDesign::kSeparated, "Separated", 235.18, 272, 180, 190, 8160},
      {PublishedDesign::kCannyReference, "Canny reference design", 264.00, 1530, {}, {}, {}},
      {PublishedDesign::kCompressor, "Compressor", 321.89, 243, 231, 100, 8144},
      {PublishedDesign::kLookaheadCompressor, "Look-Ahead Compressor", 338.41, 260, 240, 105, 8158},
  }};
  return kRows;
}

const PublishedRow& published_row(Variant variant) {
  PublishedDesign want{};
  switch (variant) {
    case Variant::kAdderTree: want = PublishedDesign::kAdderTree; break;
    case Variant::kSeparated: want = PublishedDesign::kSeparated; break;
    case Variant::kCompressor: want = PublishedDesign::kCompressor; break;
    case Variant::kLookaheadCompressor: want = PublishedDesign::kLookaheadCompressor; break;
    default: throw ContractError("published_row: unknown variant");
  }
  for (const PublishedRow& row : published_rows())
    if (row.design == want) return row;
  throw ContractError("published_row: unknown variant");
}

std::vector<ComparisonLine> compare_with_paper(const ResourceReport& report,
                                               Variant variant) {
  const PublishedRow& row = published_row(variant);
  auto line = [](std::string metric, std::optional<double> modeled,
                 std::optional<double> published) {
    ComparisonLine l{std::move(metric), modeled, published, {}, {}};
    if (modeled && published) {
      l.abs_delta = *modeled - *published;
      if (*published != 0.0) l.rel_delta = (*modeled - *published) / *published;
    }
    return l;
  };
  auto opt = [](std::optional<int> v) -> std::optional<double> {
    return v ? std::optional<double>(*v) : std::nullopt;
  };
  return {
      line("total_les", report.total_les, opt(row.total_les)),
      line("luts", report.luts, opt(row.luts)),
      line("logic_registers", report.logic_registers, opt(row.logic_registers)),
      line("dedicated_registers", static_cast<double>(report.dedicated_register_bits),
           opt(row.dedicated_registers)),
      // Levels are dimensionless; there is nothing to subtract MHz from.
      line("fmax_mhz", std::nullopt, row.fmax_mhz),
  };
}

namespace {

std::string fmt_opt(std::optional<double> v, int precision = 0) {
  if (!v) return "NA";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", precision, *v);
  return buf;
}

}  // namespace

void render_text(std::ostream& os, std::span<const ResourceReport> reports) {
  os << std::left << std::setw(22) << "variant" << std::right << std::setw(10)
     << "total LEs" << std::setw(8) << "LUTs" << std::setw(8) << "regs"
     << std::setw(12) << "dedicated" << std::setw(8) << "levels" << std::setw(11)
     << "crossings" << '\n';
  for (const ResourceReport& r : reports) {
    os << std::left << std::setw(22) << to_string(r.variant) << std::right
       << std::setw(10) << r.total_les << std::setw(8) << r.luts << std::setw(8)
       << r.logic_registers << std::setw(12) << r.dedicated_register_bits
       << std::setw(8) << r.critical_path_levels << std::setw(11)
       << r.column_crossings << '\n';
  }
  for (const ResourceReport& r : reports) {
    os << '\n' << to_string(r.variant) << " vs published\n";
    os << std::left << std::setw(22) << "  metric" << std::right << std::setw(10)
       << "model" << std::setw(10) << "published" << std::setw(10) << "delta"
       << std::setw(10) << "rel %" << '\n';
    for (const ComparisonLine& l : compare_with_paper(r, r.variant)) {
      const int prec = l.metric == "fmax_mhz" ? 2 : 0;
      os << std::left << std::setw(22) << ("  " + l.metric) << std::right
         << std::setw(10) << fmt_opt(l.modeled) << std::setw(10)
         << fmt_opt(l.published, prec) << std::setw(10) << fmt_opt(l.abs_delta)
         << std::setw(10)
         << fmt_opt(l.rel_delta ? std::optional<double>(*l.rel_delta * 100.0)
                                : std::nullopt,
                    1)
         << '\n';
    }
  }
}

void render_published_table(std::ostream& os) {
  os << std::left << std::setw(26) << "design" << std::right << std::setw(10)
     << "MHz" << std::setw(11) << "total LEs" << std::setw(8) << "LUTs"
     << std::setw(8) << "regs" << std::setw(12) << "dedicated" << '\n';
  auto opt = [](std::optional<int> v) {
    return v ? std::optional<double>(*v) : std::nullopt;
  };
  for (const PublishedRow& row : published_rows()) {
    os << std::left << std::setw(26) << row.name << std::right << std::setw(10)
       << fmt_opt(row.fmax_mhz, 2) << std::setw(11) << fmt_opt(opt(row.total_les))
       << std::setw(8) << fmt_opt(opt(row.luts)) << std::setw(8)
       << fmt_opt(opt(row.logic_registers)) << std::setw(12)
       << fmt_opt(opt(row.dedicated_registers)) << '\n';
  }
}

void render_key_values(std::ostream& os, std::span<const ResourceReport> reports) {
  for (const ResourceReport& r : reports) {
    const std::string v(to_string(r.variant));
    os << "resource." << v << ".total_les=" << r.total_les << '\n'
       << "resource." << v << ".luts=" << r.luts << '\n'
       << "resource." << v << ".logic_registers=" << r.logic_registers << '\n'
       << "resource." << v << ".dedicated_register_bits=" << r.dedicated_register_bits << '\n'
       << "path." << v << ".levels=" << r.critical_path_levels << '\n'
       << "path." << v << ".column_crossings=" << r.column_crossings << '\n';
    for (const ComparisonLine& l : compare_with_paper(r, r.variant)) {
      os << "paper." << v << '.' << l.metric << '='
         << fmt_opt(l.published, l.metric == "fmax_mhz" ? 2 : 0) << '\n';
    }
  }
}

}  // namespace sobelcs::resource
