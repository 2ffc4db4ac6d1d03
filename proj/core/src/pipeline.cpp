#include "sobelcs/pipeline.hpp"

namespace sobelcs {

SobelPipeline::SobelPipeline(int line_width, Variant variant, EdgeParams params)
    : cache_(line_width), variant_(variant), params_(params) {}

void SobelPipeline::clear() {
  cache_.clear();
  side_.reset();
}

std::optional<EdgeSample> SobelPipeline::push(const StreamEvent& event) {
  if (event.kind == StreamEvent::Kind::kEndOfFrame) {
    const bool was_open = !cache_.frame_ended();
    cache_.push(event);
    side_.reset();
    if (was_open) ++frame_;
    return std::nullopt;
  }
  if (event.kind != StreamEvent::Kind::kPixel) {
    cache_.push(event);
    return std::nullopt;
  }
  // The driver raises CLR between frames.
  if (cache_.frame_ended()) cache_.clear();

  const std::size_t before = cache_.priming_count();
  const std::optional<Window3x3> window = cache_.push(event);
  if (cache_.priming_count() == before) return std::nullopt;  // ENA low
  ++cycles_;

  CycleTrace trace;
  trace.cycle = cycles_;
  trace.row = cache_.row();
  trace.col = cache_.column();
  trace.pixel = event.value;
  trace.registers = cache_.registers();
  trace.column_valid = cache_.column_valid();
  trace.window_valid = window.has_value();

  std::optional<EdgeSample> sample;
  if (cache_.column_valid()) {
    if (cache_.column() == 0) side_.reset();

    DatapathHooks hooks;
    hooks.access_log = access_log_;
    if (window && fault_ && fault_->sample_index == samples_) {
      hooks.gx_sum_fault = 1u << fault_->bit;
    }
    trace.gx = gx_datapath(cache_.registers(), side_, variant_, hooks);
    hooks.gx_sum_fault = 0;
    trace.gy = gy_datapath(cache_.registers(), side_, variant_, hooks);

    if (window) {
      // Side-cache priming and window validity coincide by construction.
      if (!trace.gx.gradient || !trace.gy.gradient) {
        throw StateError("datapath not primed on a valid window");
      }
      EdgeSample s;
      s.frame = frame_;
      s.row = cache_.row() - 1;
      s.col = cache_.column() - 1;
      s.gradient = {trace.gx.gradient->to_signed(), trace.gy.gradient->to_signed()};
      s.value = edge_value(s.gradient, params_);
      sample = s;
      ++samples_;
    }
  }

  if (trace_sink_) {
    trace.caches = side_;
    trace.sample = sample;
    trace_sink_(trace);
  }
  return sample;
}

FrameResult process_frame_detailed(const Image& image, Variant variant,
                                   const EdgeParams& params,
                                   const FrameOptions& options) {
  require_convolvable("process_frame", image.width(), image.height());
  SobelPipeline pipe(image.width(), variant, params);
  pipe.set_fault(options.fault);
  pipe.set_access_log(options.access_log);

  FrameResult out;
  out.edges = EdgeImage(image.width(), image.height(), 0);
  out.gx = SignedMap(image.width(), image.height(), 0);
  out.gy = SignedMap(image.width(), image.height(), 0);

  std::uint64_t raster = 0;
  for (int r = 0; r < image.height(); ++r) {
    for (int c = 0; c < image.width(); ++c, ++raster) {
      const auto s = pipe.push(StreamEvent::pixel(image.at(r, c)));
      if (!s) continue;
      if (!out.first_sample_pixel) out.first_sample_pixel = raster;
      out.edges.at(s->row, s->col) = s->value;
      out.gx.at(s->row, s->col) = s->gradient.gx;
      out.gy.at(s->row, s->col) = s->gradient.gy;
    }
  }
  pipe.push(StreamEvent::end_of_frame());
  out.cycles = pipe.cycles();
  out.samples = pipe.samples_emitted();
  return out;
}

EdgeImage process_frame(const Image& image, Variant variant,
                        const EdgeParams& params) {
  return process_frame_detailed(image, variant, params).edges;
}

std::vector<EdgeSample> process_stream(std::span<const StreamEvent> events,
                                       int line_width, Variant variant,
                                       const EdgeParams& params) {
  SobelPipeline pipe(line_width, variant, params);
  std::vector<EdgeSample> out;
  for (const StreamEvent& e : events) {
    if (auto s = pipe.push(e)) out.push_back(*s);
  }
  return out;
}

}  // namespace sobelcs
