#include <gtest/gtest.h>

#include <sstream>

#include "sobelcs/errors.hpp"
#include "sobelcs/resource_model.hpp"

namespace sobelcs::resource {
namespace {

ResourceReport report_for(Variant v, int width = 512) {
  DesignParams p;
  p.width = width;
  p.variant = v;
  return estimate_resources(p);
}

TEST(ResourceModelTest, CompressorDedicatedBitsAt512) {
  EXPECT_EQ(report_for(Variant::kCompressor).dedicated_register_bits, 2 * 509 * 8);
  EXPECT_EQ(report_for(Variant::kCompressor).dedicated_register_bits, 8144);
}

TEST(ResourceModelTest, DedicatedBitsWithinPublishedRange) {
  for (Variant v : kAllVariants) {
    const auto bits = report_for(v).dedicated_register_bits;
    EXPECT_GE(bits, 8128) << to_string(v);
    EXPECT_LE(bits, 8160) << to_string(v);
  }
}

TEST(ResourceModelTest, LineBufferBitsScaleLinearlyInWidth) {
  for (Variant v : kAllVariants) {
    const auto a = report_for(v, 1027).dedicated_register_bits;
    const auto b = report_for(v, 2051).dedicated_register_bits;  // (W-3) doubles
    const auto base = report_for(v, 3).dedicated_register_bits;  // pipeline bits only
    EXPECT_EQ(b - base, 2 * (a - base)) << to_string(v);
  }
}

TEST(ResourceModelTest, TotalLeOrdering) {
  const int comp = report_for(Variant::kCompressor).total_les;
  const int tree = report_for(Variant::kAdderTree).total_les;
  const int la = report_for(Variant::kLookaheadCompressor).total_les;
  const int sep = report_for(Variant::kSeparated).total_les;
  EXPECT_LT(comp, tree);
  EXPECT_LT(tree, la);
  EXPECT_LT(la, sep);
  EXPECT_GT(la - comp, 0);
  EXPECT_LE(la - comp, 40);
}

TEST(ResourceModelTest, TotalsNearPublishedValues) {
  for (Variant v : kAllVariants) {
    const double modeled = report_for(v).total_les;
    const double published = *published_row(v).total_les;
    EXPECT_NEAR(modeled / published, 1.0, 0.15) << to_string(v);
  }
}

TEST(ResourceModelTest, CriticalPathOrdering) {
  const int tree = report_for(Variant::kAdderTree).critical_path_levels;
  const int sep = report_for(Variant::kSeparated).critical_path_levels;
  const int comp = report_for(Variant::kCompressor).critical_path_levels;
  const int la = report_for(Variant::kLookaheadCompressor).critical_path_levels;
  EXPECT_GT(tree, sep);
  EXPECT_GT(sep, comp);
  EXPECT_GT(comp, la);
}

TEST(ResourceModelTest, NarrowDatapathHasNoColumnCrossings) {
  for (Variant v : kAllVariants) {
    DesignParams p;
    p.bits_per_pixel = 1;
    p.datapath_width = 4;
    p.variant = v;
    EXPECT_EQ(estimate_resources(p).column_crossings, 0) << to_string(v);
  }
  // Eleven-bit 4:2 compressor chains span three columns.
  EXPECT_GT(report_for(Variant::kCompressor).column_crossings, 0);
}

TEST(ResourceModelTest, WideAdderChainsPayCrossingPenalty) {
  DesignParams p;
  p.bits_per_pixel = 14;
  p.datapath_width = 17;
  p.variant = Variant::kAdderTree;
  const int with_penalty = critical_path_levels(p);
  p.crossing_penalty = 0;
  EXPECT_EQ(with_penalty - critical_path_levels(p), 4 * 3);
}

TEST(ResourceModelTest, PackingInvariant) {
  for (Variant v : kAllVariants) {
    const auto r = report_for(v);
    EXPECT_GE(r.total_les, std::max(r.luts, r.logic_registers));
    EXPECT_GE(r.luts, 0);
    EXPECT_GE(r.column_crossings, 0);
  }
}

TEST(ResourceModelTest, InvalidParams) {
  DesignParams p;
  p.width = 2;
  EXPECT_THROW(estimate_resources(p), ContractError);
  p = {};
  p.datapath_width = 10;
  EXPECT_THROW(estimate_resources(p), ContractError);
  p = {};
  p.bits_per_pixel = 0;
  EXPECT_THROW(critical_path_levels(p), ContractError);
}

TEST(PublishedComparisonTest, ReportsDeltas) {
  const auto lines = compare_with_paper(report_for(Variant::kCompressor), Variant::kCompressor);
  ASSERT_FALSE(lines.empty());
  EXPECT_EQ(lines[0].metric, "total_les");
  EXPECT_EQ(lines[0].published, 243.0);
  ASSERT_TRUE(lines[0].abs_delta && lines[0].rel_delta);
  EXPECT_DOUBLE_EQ(*lines[0].abs_delta, *lines[0].modeled - 243.0);

  const auto sep = compare_with_paper(report_for(Variant::kSeparated), Variant::kSeparated);
  EXPECT_EQ(sep[0].published, 272.0);
  EXPECT_THROW(compare_with_paper(report_for(Variant::kSeparated), static_cast<Variant>(42)),
               ContractError);
}

TEST(PublishedComparisonTest, ReferenceRowsRenderNA) {
  std::ostringstream os;
  render_published_table(os);
  const std::string text = os.str();
  const auto pos = text.find("Gumstix DSP");
  ASSERT_NE(pos, std::string::npos);
  const std::string row = text.substr(pos, text.find('\n', pos) - pos);
  EXPECT_NE(row.find("43.02"), std::string::npos);
  EXPECT_NE(row.find("NA"), std::string::npos);
  EXPECT_NE(text.find("8144"), std::string::npos);
}

TEST(RenderTest, KeyValuesAreNamespaced) {
  std::ostringstream os;
  const std::vector<ResourceReport> reports{report_for(Variant::kCompressor)};
  render_key_values(os, reports);
  std::istringstream in(os.str());
  std::string line;
  int n = 0;
  while (std::getline(in, line)) {
    ++n;
    const auto eq = line.find('=');
    ASSERT_NE(eq, std::string::npos) << line;
    const std::string key = line.substr(0, eq);
    EXPECT_TRUE(key.starts_with("resource.") || key.starts_with("path.") ||
                key.starts_with("paper."))
        << key;
  }
  EXPECT_GT(n, 6);
  EXPECT_NE(os.str().find("resource.compressor.dedicated_register_bits=8144\n"),
            std::string::npos);
  EXPECT_NE(os.str().find("paper.compressor.dedicated_registers=8144\n"), std::string::npos);
}

}  // namespace
}  // namespace sobelcs::resource
