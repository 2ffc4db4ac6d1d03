#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "sobelcs/image.hpp"

namespace sobelcs {

/// 3x3 neighbourhood, row-major. Labels a b c / d e f / g h i; the newest
/// pixel is bottom-right (i).
struct Window3x3 {
  std::array<std::uint8_t, 9> px{};

  std::uint8_t at(int row, int col) const noexcept {
    return px[static_cast<std::size_t>(row * 3 + col)];
  }
  std::uint8_t& at(int row, int col) noexcept {
    return px[static_cast<std::size_t>(row * 3 + col)];
  }

  friend bool operator==(const Window3x3&, const Window3x3&) = default;
};

struct StreamEvent {
  enum class Kind : std::uint8_t { kPixel, kHBlank, kVBlank, kEndOfFrame };

  Kind kind = Kind::kPixel;
  std::uint8_t value = 0;

  static constexpr StreamEvent pixel(std::uint8_t v) noexcept { return {Kind::kPixel, v}; }
  static constexpr StreamEvent hblank() noexcept { return {Kind::kHBlank, 0}; }
  static constexpr StreamEvent vblank() noexcept { return {Kind::kVBlank, 0}; }
  static constexpr StreamEvent end_of_frame() noexcept { return {Kind::kEndOfFrame, 0}; }

  friend bool operator==(const StreamEvent&, const StreamEvent&) = default;
};

// Raster-order event stream for one frame, optionally with an HBlank after
// every line and a trailing EndOfFrame.
std::vector<StreamEvent> raster_events(const Image& image, bool hblank_per_line,
                                       bool end_of_frame);

/// Two-line streaming pixel cache.
///
/// Pixels enter at the bottom-right window register and shift left through
/// the bottom row, into line buffer 1, out into the middle row, through line
/// buffer 2 and into the top row. Each line buffer holds line_width - 3
/// pixels so the window rows are exactly one image line apart.
///
/// Blanking events hold all state. An HBlank is only legal on a line boundary;
/// once one has been seen in a frame, every later line must be terminated by
/// one. Without HBlanks, lines wrap every line_width pixels.
class PixelCache {
 public:
  explicit PixelCache(int line_width);

  // Returns the window when it holds a complete image neighbourhood.
  std::optional<Window3x3> push(const StreamEvent& event);

  // CLR: drops all buffered pixels and re-arms priming.
  void clear();
  // ENA: while disabled, pixels are not captured.
  void set_enable(bool enabled) noexcept { enabled_ = enabled; }
  bool enabled() const noexcept { return enabled_; }

  int line_width() const noexcept { return line_width_; }
  std::size_t line_buffer_length() const noexcept {
    return static_cast<std::size_t>(line_width_ - 3);
  }
  std::size_t buffered_bits() const noexcept {
    return 2 * line_buffer_length() * 8 + 9 * 8;
  }
  // Pixels pushed into the window after clear(); must reach
  // 2 * line_width + 3 before the first window.
  std::size_t priming_count() const noexcept { return accepted_; }
  std::size_t priming_latency() const noexcept {
    return 2 * static_cast<std::size_t>(line_width_) + 3;
  }

  // Raw register contents, valid or not.
  const Window3x3& registers() const noexcept { return window_; }
  // Position of the newest pixel in the current frame.
  int row() const noexcept;
  int column() const noexcept;
  // The right window column (c, f, i) is a vertical image triple.
  bool column_valid() const noexcept { return accepted_ > 0 && row() >= 2; }
  bool window_valid() const noexcept { return column_valid() && column() >= 2; }
  bool frame_ended() const noexcept { return ended_; }

 private:
  class LineBuffer {
   public:
    explicit LineBuffer(std::size_t length) : data_(length, 0) {}
    std::uint8_t exchange(std::uint8_t in) noexcept;
    void reset() noexcept;

   private:
    std::vector<std::uint8_t> data_;
    std::size_t head_ = 0;
  };

  void shift_in(std::uint8_t pixel) noexcept;
  bool at_line_boundary() const noexcept;

  int line_width_;
  LineBuffer upper_;
  LineBuffer lower_;
  Window3x3 window_;
  std::size_t accepted_ = 0;
  bool enabled_ = true;
  bool ended_ = false;
  bool hblank_framed_ = false;
  bool awaiting_hblank_ = false;
};

}  // namespace sobelcs
