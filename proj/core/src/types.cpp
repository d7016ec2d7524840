#include "flowfill/types.hpp"

#include <algorithm>
#include <cmath>

namespace flowfill {

FlowField::FlowField(int w, int h, Direction dir)
    : width(w), height(h), direction(dir),
      data(static_cast<std::size_t>(w) * h * 2, 0.f) {
  if (w <= 0 || h <= 0) {
    throw DimensionError("FlowField dimensions must be positive");
  }
}

FlowField FlowField::constant(int w, int h, float dx, float dy, Direction dir) {
  FlowField f(w, h, dir);
  for (std::size_t i = 0; i < f.data.size(); i += 2) {
    f.data[i] = dx;
    f.data[i + 1] = dy;
  }
  return f;
}

bool FlowField::all_finite() const {
  return std::all_of(data.begin(), data.end(),
                     [](float v) { return std::isfinite(v); });
}

Mask::Mask(int width, int height, std::vector<std::uint8_t> bits)
    : width_(width), height_(height), bits_(std::move(bits)) {
  if (width <= 0 || height <= 0) {
    throw DimensionError("Mask dimensions must be positive");
  }
  if (bits_.size() != static_cast<std::size_t>(width) * height) {
    throw DimensionError("Mask bit count does not match dimensions");
  }
  // Normalize so equality is representation-independent.
  for (auto& b : bits_) b = b ? 1 : 0;
}

Mask Mask::filled(int width, int height, bool missing) {
  return Mask(width, height,
              std::vector<std::uint8_t>(static_cast<std::size_t>(width) * height,
                                        missing ? 1 : 0));
}

long Mask::count_missing() const {
  return static_cast<long>(std::count_if(bits_.begin(), bits_.end(),
                                         [](std::uint8_t b) { return b != 0; }));
}

Frame::Frame(int w, int h, int idx)
    : width(w), height(h), index(idx),
      rgb(static_cast<std::size_t>(w) * h * 3, 0) {
  if (w <= 0 || h <= 0) {
    throw DimensionError("Frame dimensions must be positive");
  }
}

Frame Frame::solid(int w, int h, std::uint8_t r, std::uint8_t g, std::uint8_t b,
                   int idx) {
  Frame f(w, h, idx);
  for (std::size_t i = 0; i < f.rgb.size(); i += 3) {
    f.rgb[i] = r;
    f.rgb[i + 1] = g;
    f.rgb[i + 2] = b;
  }
  return f;
}

std::uint8_t quantize_channel(float value) {
  const float clamped = std::clamp(value, 0.f, 255.f);
  return static_cast<std::uint8_t>(std::lround(clamped));
}

void SequenceBundle::validate() const {
  if (frames.empty()) {
    throw DimensionError("SequenceBundle has no frames");
  }
  if (masks.size() != frames.size()) {
    throw DimensionError("SequenceBundle has " + std::to_string(masks.size()) +
                         " masks for " + std::to_string(frames.size()) + " frames");
  }
  const std::size_t pairs = frames.size() - 1;
  if (fwd_flows.size() != pairs || bwd_flows.size() != pairs) {
    throw DimensionError("SequenceBundle needs exactly frames-1 flows per direction, got " +
                         std::to_string(fwd_flows.size()) + " forward / " +
                         std::to_string(bwd_flows.size()) + " backward for " +
                         std::to_string(frames.size()) + " frames");
  }
  const int w = width();
  const int h = height();
  auto check = [&](int fw, int fh, const char* what, std::size_t i) {
    if (fw != w || fh != h) {
      throw DimensionError(std::string(what) + " " + std::to_string(i) + " is " +
                           std::to_string(fw) + "x" + std::to_string(fh) +
                           ", sequence is " + std::to_string(w) + "x" + std::to_string(h));
    }
  };
  for (std::size_t i = 0; i < frames.size(); ++i) {
    check(frames[i].width, frames[i].height, "frame", i);
    check(masks[i].width(), masks[i].height(), "mask", i);
  }
  for (std::size_t i = 0; i < fwd_flows.size(); ++i) {
    check(fwd_flows[i].width, fwd_flows[i].height, "forward flow", i);
    check(bwd_flows[i].width, bwd_flows[i].height, "backward flow", i);
  }
}

const Mask& flow_mask(const SequenceBundle& bundle, int pair, Direction dir) {
  return dir == Direction::Forward ? bundle.masks[pair] : bundle.masks[pair + 1];
}

}  // namespace flowfill
