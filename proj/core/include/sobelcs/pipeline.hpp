#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "sobelcs/datapath.hpp"
#include "sobelcs/edge_math.hpp"
#include "sobelcs/image.hpp"
#include "sobelcs/pixel_cache.hpp"

namespace sobelcs {

struct EdgeSample {
  int frame = 0;
  int row = 0;  // image coordinates of the window centre
  int col = 0;
  GradientSample gradient;
  std::uint8_t value = 0;

  friend bool operator==(const EdgeSample&, const EdgeSample&) = default;
};

// Flips one bit of the Gx compressor sum word on the n-th emitted sample
// (counted across all frames of a pipeline instance).
struct FaultInjection {
  std::uint64_t sample_index = 0;
  int bit = 0;
};

struct CycleTrace {
  std::uint64_t cycle = 0;  // accepted pixels so far, this one included
  int row = 0;
  int col = 0;
  std::uint8_t pixel = 0;
  Window3x3 registers;
  bool column_valid = false;
  bool window_valid = false;
  StageTrace gx;
  StageTrace gy;
  SideCaches caches;  // after this cycle's shift
  std::optional<EdgeSample> sample;
};

/// Pixel cache plus one datapath variant, clocked once per stream event.
class SobelPipeline {
 public:
  SobelPipeline(int line_width, Variant variant, EdgeParams params = {});

  std::optional<EdgeSample> push(const StreamEvent& event);
  void clear();

  void set_fault(std::optional<FaultInjection> fault) { fault_ = fault; }
  void set_access_log(AccessLog* log) noexcept { access_log_ = log; }
  void set_trace_sink(std::function<void(const CycleTrace&)> sink) {
    trace_sink_ = std::move(sink);
  }

  Variant variant() const noexcept { return variant_; }
  const PixelCache& cache() const noexcept { return cache_; }
  std::uint64_t cycles() const noexcept { return cycles_; }
  std::uint64_t samples_emitted() const noexcept { return samples_; }
  int frame_index() const noexcept { return frame_; }

 private:
  PixelCache cache_;
  Variant variant_;
  EdgeParams params_;
  SideCaches side_;
  std::optional<FaultInjection> fault_;
  AccessLog* access_log_ = nullptr;
  std::function<void(const CycleTrace&)> trace_sink_;
  std::uint64_t cycles_ = 0;
  std::uint64_t samples_ = 0;
  int frame_ = 0;
};

struct FrameResult {
  EdgeImage edges;
  SignedMap gx;
  SignedMap gy;
  std::uint64_t cycles = 0;
  // Raster index of the pixel whose arrival produced the first sample.
  std::optional<std::uint64_t> first_sample_pixel;
  std::uint64_t samples = 0;
};

struct FrameOptions {
  std::optional<FaultInjection> fault;
  AccessLog* access_log = nullptr;
};

FrameResult process_frame_detailed(const Image& image, Variant variant,
                                   const EdgeParams& params = {},
                                   const FrameOptions& options = {});

// Interior pixels carry magnitudes; the one-pixel border is zero.
EdgeImage process_frame(const Image& image, Variant variant,
                        const EdgeParams& params = {});

// Runs an event stream through a fresh pipeline. EndOfFrame flushes and
// re-arms the cache, so consecutive frames are independent.
std::vector<EdgeSample> process_stream(std::span<const StreamEvent> events,
                                       int line_width, Variant variant,
                                       const EdgeParams& params = {});

}  // namespace sobelcs
