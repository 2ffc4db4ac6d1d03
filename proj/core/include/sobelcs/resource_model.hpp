#pragma once

#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sobelcs/datapath.hpp"

namespace sobelcs::resource {

struct DesignParams {
  int width = 512;
  int height = 512;
  int bits_per_pixel = 8;
  int datapath_width = 11;
  Variant variant = Variant::kLookaheadCompressor;
  int column_height = 16;    // LEs per logic-array column
  int crossing_penalty = 3;  // LE-equivalents per global-routing hop

  // Throws ContractError on W, H < 3, bpp < 1 or datapath_width < bpp + 3.
  void validate() const;
};

struct ResourceReport {
  Variant variant = Variant::kLookaheadCompressor;
  int total_les = 0;
  int luts = 0;
  int logic_registers = 0;
  long long dedicated_register_bits = 0;
  int critical_path_levels = 0;
  int column_crossings = 0;
};

/// One costed piece of the design. Registers marked packable are driven by a
/// LUT and can share its LE.
struct Block {
  std::string name;
  int luts = 0;
  int registers = 0;
  int packable_registers = 0;
  int chain_length = 0;  // LEs on one carry chain, 0 if none
  int chain_count = 0;
};

std::vector<Block> design_blocks(const DesignParams& p);
ResourceReport estimate_resources(const DesignParams& p);
int critical_path_levels(const DesignParams& p);

// Published figures for every row of the frequency and resource tables,
// including reference designs that are not modelled. Missing entries are
// std::nullopt and render as NA.
enum class PublishedDesign {
  kGumstixDsp,
  kSobelReference,
  kAdderTree,
  kSeparated,
  kCannyReference,
  kCompressor,
  kLookaheadCompressor,
};

struct PublishedRow {
  PublishedDesign design;
  std::string_view name;
  std::optional<double> fmax_mhz;
  std::optional<int> total_les;
  std::optional<int> luts;
  std::optional<int> logic_registers;
  std::optional<int> dedicated_registers;
};

std::span<const PublishedRow> published_rows();
const PublishedRow& published_row(Variant variant);

struct ComparisonLine {
  std::string metric;
  std::optional<double> modeled;
  std::optional<double> published;
  std::optional<double> abs_delta;
  std::optional<double> rel_delta;  // (modeled - published) / published
};

// Reporting only; never asserts agreement.
std::vector<ComparisonLine> compare_with_paper(const ResourceReport& report,
                                               Variant variant);

void render_text(std::ostream& os, std::span<const ResourceReport> reports);
void render_published_table(std::ostream& os);
// Stable "key=value" lines under resource.<variant>., path.<variant>.,
// paper.<variant>.
void render_key_values(std::ostream& os, std::span<const ResourceReport> reports);

}  // namespace sobelcs::resource
