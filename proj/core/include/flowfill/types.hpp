#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace flowfill {

// Grid coordinate convention used everywhere in this library:
// a location is (x, y) = (column, row), and a flow vector (dx, dy) displaces
// columns and rows respectively, so x' = x + f(x) works componentwise.
struct Vec2f {
  float x = 0.f;
  float y = 0.f;
};

struct Vec3f {
  float r = 0.f;
  float g = 0.f;
  float b = 0.f;
};

enum class Direction {
  Forward,   // frame i -> i+1, defined on the pixels of frame i
  Backward,  // frame i <- i+1, defined on the pixels of frame i+1
};

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed serialized data. Carries the byte offset of the problem when known.
class FormatError : public Error {
 public:
  explicit FormatError(const std::string& msg, long offset = -1)
      : Error(offset >= 0 ? msg + " (at byte " + std::to_string(offset) + ")" : msg),
        offset_(offset) {}
  long byte_offset() const { return offset_; }

 private:
  long offset_;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

// Dense 2-channel displacement grid between two frames. Components are in
// pixels of the grid's own resolution, stored row-major as (dx, dy) pairs.
struct FlowField {
  int width = 0;
  int height = 0;
  Direction direction = Direction::Forward;
  std::vector<float> data;  // width * height * 2

  FlowField() = default;
  FlowField(int w, int h, Direction dir);
  static FlowField constant(int w, int h, float dx, float dy,
                            Direction dir = Direction::Forward);

  std::size_t index(int x, int y) const {
    return (static_cast<std::size_t>(y) * width + x) * 2;
  }
  float dx(int x, int y) const { return data[index(x, y)]; }
  float dy(int x, int y) const { return data[index(x, y) + 1]; }
  Vec2f at(int x, int y) const { return {dx(x, y), dy(x, y)}; }
  void set(int x, int y, float dx_val, float dy_val) {
    data[index(x, y)] = dx_val;
    data[index(x, y) + 1] = dy_val;
  }

  bool all_finite() const;
  bool same_sizes(const FlowField& other) const {
    return width == other.width && height == other.height;
  }
};

// Binary per-pixel grid marking missing (to-be-filled) cells. Immutable once
// constructed; operations that derive masks return new values.
class Mask {
 public:
  Mask() = default;
  Mask(int width, int height, std::vector<std::uint8_t> bits);
  static Mask filled(int width, int height, bool missing);
  // Builder for the common construct-then-freeze pattern.
  static Mask from_predicate(int width, int height,
                             const std::vector<std::uint8_t>& bits) {
    return Mask(width, height, bits);
  }

  int width() const { return width_; }
  int height() const { return height_; }
  bool missing(int x, int y) const {
    return bits_[static_cast<std::size_t>(y) * width_ + x] != 0;
  }
  long count_missing() const;
  bool any_missing() const { return count_missing() > 0; }
  bool all_missing() const { return count_missing() == width_ * static_cast<long>(height_); }
  const std::vector<std::uint8_t>& bits() const { return bits_; }

  bool operator==(const Mask& other) const {
    return width_ == other.width_ && height_ == other.height_ && bits_ == other.bits_;
  }

 private:
  int width_ = 0;
  int height_ = 0;
  std::vector<std::uint8_t> bits_;
};

// 8-bit RGB raster. All warping/blending arithmetic happens in 32-bit floats
// elsewhere; this type only lives at I/O boundaries.
struct Frame {
  int width = 0;
  int height = 0;
  int index = 0;  // frame number within its sequence
  std::vector<std::uint8_t> rgb;  // width * height * 3

  Frame() = default;
  Frame(int w, int h, int idx = 0);
  static Frame solid(int w, int h, std::uint8_t r, std::uint8_t g, std::uint8_t b,
                     int idx = 0);

  std::size_t pixel_index(int x, int y) const {
    return (static_cast<std::size_t>(y) * width + x) * 3;
  }
  std::uint8_t channel(int x, int y, int c) const { return rgb[pixel_index(x, y) + c]; }
  Vec3f at(int x, int y) const {
    const std::size_t i = pixel_index(x, y);
    return {static_cast<float>(rgb[i]), static_cast<float>(rgb[i + 1]),
            static_cast<float>(rgb[i + 2])};
  }
  void set(int x, int y, std::uint8_t r, std::uint8_t g, std::uint8_t b) {
    const std::size_t i = pixel_index(x, y);
    rgb[i] = r;
    rgb[i + 1] = g;
    rgb[i + 2] = b;
  }
  bool same_sizes(const Frame& other) const {
    return width == other.width && height == other.height;
  }
};

// Clamp-and-round used once, at final 8-bit output.
std::uint8_t quantize_channel(float value);

// Time-ordered frames with per-frame masks and adjacent-pair flows in both
// directions. fwd_flows[i] maps frame i -> i+1; bwd_flows[i] maps i <- i+1.
struct SequenceBundle {
  std::vector<Frame> frames;
  std::vector<Mask> masks;
  std::vector<FlowField> fwd_flows;
  std::vector<FlowField> bwd_flows;

  int frame_count() const { return static_cast<int>(frames.size()); }
  int pair_count() const { return frame_count() - 1; }
  int width() const { return frames.empty() ? 0 : frames.front().width; }
  int height() const { return frames.empty() ? 0 : frames.front().height; }

  // Throws DimensionError describing the first violated invariant.
  void validate() const;
};

// The mask that marks missing cells of one flow: a flow is unknown where its
// source frame is masked, so forward pair i uses masks[i] and backward pair i
// uses masks[i + 1].
const Mask& flow_mask(const SequenceBundle& bundle, int pair, Direction dir);

}  // namespace flowfill
