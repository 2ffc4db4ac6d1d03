#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "sobelcs/golden.hpp"
#include "sobelcs/patterns.hpp"
#include "sobelcs/pipeline.hpp"

namespace sobelcs {
namespace {

class PipelineVariantTest : public ::testing::TestWithParam<Variant> {};

TEST_P(PipelineVariantTest, MatchesGoldenOnRandomFrames) {
  for (std::uint64_t f = 0; f < 20; ++f) {
    const Image img = patterns::random_image(64, 64, 1234, f);
    const FrameResult got = process_frame_detailed(img, GetParam());
    const auto want = golden::sobel_gradients(img);
    ASSERT_EQ(got.gx, want.gx) << "frame " << f;
    ASSERT_EQ(got.gy, want.gy) << "frame " << f;
    ASSERT_EQ(got.edges, golden::sobel_golden(img)) << "frame " << f;
  }
}

TEST_P(PipelineVariantTest, OddShapesAndThresholds) {
  EdgeParams params;
  params.threshold = 90;
  params.norm = Norm::kL1;
  for (auto [w, h] : {std::pair{3, 3}, {3, 9}, {17, 4}, {5, 31}}) {
    const Image img = patterns::random_image(w, h, 8);
    EXPECT_EQ(process_frame(img, GetParam(), params), golden::sobel_golden(img, params))
        << w << 'x' << h;
  }
}

TEST_P(PipelineVariantTest, ConstantImageGivesZeroEdges) {
  const EdgeImage e = process_frame(patterns::constant_image(12, 9, 200), GetParam());
  for (auto v : e.data()) EXPECT_EQ(v, 0);
}

TEST_P(PipelineVariantTest, GradientsStayInRange) {
  for (std::uint64_t f = 0; f < 5; ++f) {
    const FrameResult r = process_frame_detailed(patterns::random_image(32, 32, 6, f), GetParam());
    for (std::size_t i = 0; i < r.gx.size(); ++i) {
      ASSERT_LE(std::abs(r.gx.data()[i]), kMaxGradient);
      ASSERT_LE(std::abs(r.gy.data()[i]), kMaxGradient);
    }
  }
  // Extremes: checkerboard of 0/255 columns and rows.
  Image board(8, 8);
  for (int r = 0; r < 8; ++r)
    for (int c = 0; c < 8; ++c) board.at(r, c) = ((r / 2 + c / 2) % 2) ? 255 : 0;
  const FrameResult r = process_frame_detailed(board, GetParam());
  EXPECT_EQ(r.gx, golden::sobel_gradients(board).gx);
}

TEST_P(PipelineVariantTest, BlankedStreamMatchesFrame) {
  std::mt19937 rng(99);
  const Image img = patterns::random_image(20, 11, 3);
  std::vector<StreamEvent> events;
  events.push_back(StreamEvent::vblank());
  for (int r = 0; r < img.height(); ++r) {
    for (int c = 0; c < img.width(); ++c) {
      if (rng() % 5 == 0) events.push_back(StreamEvent::vblank());
      events.push_back(StreamEvent::pixel(img.at(r, c)));
    }
    for (unsigned k = 0; k < 1 + rng() % 4; ++k) events.push_back(StreamEvent::hblank());
  }
  events.push_back(StreamEvent::end_of_frame());
  const auto blanked = process_stream(events, img.width(), GetParam());
  const auto plain = process_stream(raster_events(img, false, true), img.width(), GetParam());
  EXPECT_EQ(blanked, plain);

  EdgeImage assembled(img.width(), img.height(), 0);
  for (const auto& s : plain) assembled.at(s.row, s.col) = s.value;
  EXPECT_EQ(assembled, process_frame(img, GetParam()));
}

INSTANTIATE_TEST_SUITE_P(AllVariants, PipelineVariantTest, ::testing::ValuesIn(kAllVariants),
                         [](const auto& info) {
                           std::string n(to_string(info.param));
                           std::erase(n, '-');
                           return n;
                         });

TEST(PipelineTest, CycleBookkeepingAt512) {
  const Image img = patterns::random_image(512, 512, 1);
  const FrameResult r = process_frame_detailed(img, Variant::kLookaheadCompressor);
  EXPECT_EQ(r.cycles, 512u * 512u);
  ASSERT_TRUE(r.first_sample_pixel);
  EXPECT_EQ(*r.first_sample_pixel, 2u * 512u + 2u);
  EXPECT_EQ(r.samples, 510u * 510u);
}

TEST(PipelineTest, OneSamplePerPixelAfterRowPriming) {
  const Image img = patterns::random_image(10, 6, 2);
  SobelPipeline pipe(10, Variant::kCompressor);
  std::vector<int> emitting_cols;
  for (int r = 0; r < 6; ++r)
    for (int c = 0; c < 10; ++c)
      if (pipe.push(StreamEvent::pixel(img.at(r, c))) && r == 3) emitting_cols.push_back(c);
  EXPECT_EQ(emitting_cols, (std::vector<int>{2, 3, 4, 5, 6, 7, 8, 9}));
}

TEST(PipelineTest, EmptyStream) {
  EXPECT_TRUE(process_stream({}, 8, Variant::kCompressor).empty());
}

TEST(PipelineTest, ConsecutiveFramesAreIndependent) {
  const Image a = patterns::random_image(9, 7, 10);
  const Image b = patterns::random_image(9, 7, 11);
  auto events = raster_events(a, true, true);
  const auto second = raster_events(b, false, true);
  events.push_back(StreamEvent::vblank());
  events.insert(events.end(), second.begin(), second.end());

  const auto both = process_stream(events, 9, Variant::kLookaheadCompressor);
  auto only_a = process_stream(raster_events(a, false, true), 9, Variant::kLookaheadCompressor);
  auto only_b = process_stream(raster_events(b, false, true), 9, Variant::kLookaheadCompressor);
  for (auto& s : only_b) s.frame = 1;
  std::vector<EdgeSample> expected = only_a;
  expected.insert(expected.end(), only_b.begin(), only_b.end());
  EXPECT_EQ(both, expected);
}

TEST(PipelineTest, FramingErrorsPropagate) {
  std::vector<StreamEvent> events(5, StreamEvent::pixel(0));
  events.push_back(StreamEvent::hblank());
  EXPECT_THROW(process_stream(events, 4, Variant::kCompressor), FramingError);
}

TEST(PipelineTest, UndersizedFrame) {
  EXPECT_THROW(process_frame(Image(2, 8), Variant::kCompressor), ImageError);
}

TEST(PipelineTest, FaultInjectionFlipsOneGradient) {
  const Image img = patterns::random_image(16, 16, 5);
  const auto want = golden::sobel_gradients(img);
  for (Variant v : kAllVariants) {
    FrameOptions opts;
    opts.fault = FaultInjection{37, 4};
    const FrameResult r = process_frame_detailed(img, v, {}, opts);
    int diffs = 0;
    for (std::size_t i = 0; i < r.gx.size(); ++i) {
      if (r.gx.data()[i] == want.gx.data()[i]) continue;
      ++diffs;
      EXPECT_EQ(((r.gx.data()[i] - want.gx.data()[i]) % 2048 + 2048) % 16, 0);
    }
    EXPECT_EQ(diffs, 1) << to_string(v);
    EXPECT_EQ(r.gy, want.gy);
  }
}

TEST(PipelineTest, AccessLogCountsFourOperandsPerSample) {
  AccessLog log;
  FrameOptions opts;
  opts.access_log = &log;
  const Image img = patterns::random_image(8, 8, 5);
  const FrameResult r = process_frame_detailed(img, Variant::kLookaheadCompressor, {}, opts);
  // Per column-valid cycle: gx reads 3 pixels, gy 2; each emitted sample adds
  // one cache read for gx and two for gy.
  const int column_cycles = 6 * 8;
  EXPECT_EQ(log.window_reads, 5 * column_cycles);
  EXPECT_EQ(log.cache_reads, 3 * static_cast<int>(r.samples));
}

}  // namespace
}  // namespace sobelcs
