#include "sobelcs/pixel_cache.hpp"

#include <algorithm>
#include <string>

namespace sobelcs {

std::vector<StreamEvent> raster_events(const Image& image, bool hblank_per_line,
                                       bool end_of_frame) {
  std::vector<StreamEvent> events;
  events.reserve(image.size() +
                 (hblank_per_line ? static_cast<std::size_t>(image.height()) : 0) + 1);
  for (int r = 0; r < image.height(); ++r) {
    for (int c = 0; c < image.width(); ++c)
      events.push_back(StreamEvent::pixel(image.at(r, c)));
    if (hblank_per_line) events.push_back(StreamEvent::hblank());
  }
  if (end_of_frame) events.push_back(StreamEvent::end_of_frame());
  return events;
}

std::uint8_t PixelCache::LineBuffer::exchange(std::uint8_t in) noexcept {
  if (data_.empty()) return in;
  const std::uint8_t out = data_[head_];
  data_[head_] = in;
  head_ = (head_ + 1) % data_.size();
  return out;
}

void PixelCache::LineBuffer::reset() noexcept {
  std::fill(data_.begin(), data_.end(), std::uint8_t{0});
  head_ = 0;
}

PixelCache::PixelCache(int line_width)
    : line_width_(line_width),
      upper_(line_width >= 3 ? static_cast<std::size_t>(line_width - 3) : 0),
      lower_(line_width >= 3 ? static_cast<std::size_t>(line_width - 3) : 0) {
  if (line_width < 3) {
    throw ContractError("PixelCache: line_width must be >= 3, got " +
                        std::to_string(line_width));
  }
}

void PixelCache::clear() {
  upper_.reset();
  lower_.reset();
  window_ = {};
  accepted_ = 0;
  ended_ = false;
  hblank_framed_ = false;
  awaiting_hblank_ = false;
}

int PixelCache::row() const noexcept {
  return accepted_ == 0 ? 0
                        : static_cast<int>((accepted_ - 1) /
                                           static_cast<std::size_t>(line_width_));
}

int PixelCache::column() const noexcept {
  return accepted_ == 0 ? 0
                        : static_cast<int>((accepted_ - 1) %
                                           static_cast<std::size_t>(line_width_));
}

bool PixelCache::at_line_boundary() const noexcept {
  return accepted_ % static_cast<std::size_t>(line_width_) == 0;
}

void PixelCache::shift_in(std::uint8_t pixel) noexcept {
  // Bottom row.
  const std::uint8_t g = window_.at(2, 0);
  window_.at(2, 0) = window_.at(2, 1);
  window_.at(2, 1) = window_.at(2, 2);
  window_.at(2, 2) = pixel;
  // Middle row fed from line buffer 1.
  const std::uint8_t d = window_.at(1, 0);
  window_.at(1, 0) = window_.at(1, 1);
  window_.at(1, 1) = window_.at(1, 2);
  window_.at(1, 2) = lower_.exchange(g);
  // Top row fed from line buffer 2.
  window_.at(0, 0) = window_.at(0, 1);
  window_.at(0, 1) = window_.at(0, 2);
  window_.at(0, 2) = upper_.exchange(d);
}

std::optional<Window3x3> PixelCache::push(const StreamEvent& event) {
  switch (event.kind) {
    case StreamEvent::Kind::kHBlank:
      if (!at_line_boundary()) {
        throw FramingError("HBlank in the middle of a line (" +
                           std::to_string(accepted_ % static_cast<std::size_t>(line_width_)) +
                           " of " + std::to_string(line_width_) + " pixels)");
      }
      if (!ended_) {
        hblank_framed_ = true;
        awaiting_hblank_ = false;
      }
      return std::nullopt;

    case StreamEvent::Kind::kVBlank:
      return std::nullopt;

    case StreamEvent::Kind::kEndOfFrame:
      if (ended_) return std::nullopt;
      if (!at_line_boundary()) {
        throw FramingError("EndOfFrame in the middle of a line");
      }
      clear();
      ended_ = true;
      return std::nullopt;

    case StreamEvent::Kind::kPixel:
      break;
  }

  if (ended_) throw StateError("pixel after EndOfFrame without clear");
  if (awaiting_hblank_) {
    throw FramingError("more than " + std::to_string(line_width_) +
                       " pixels between HBlank events");
  }
  if (!enabled_) return std::nullopt;

  shift_in(event.value);
  ++accepted_;
  if (hblank_framed_ && at_line_boundary()) awaiting_hblank_ = true;

  if (window_valid()) return window_;
  return std::nullopt;
}

}  // namespace sobelcs
