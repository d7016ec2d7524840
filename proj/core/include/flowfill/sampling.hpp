#pragma once

#include <optional>

#include "flowfill/types.hpp"

namespace flowfill {

// The four-cell neighborhood of a subpixel location. Cells whose bilinear
// weight is exactly zero are excluded from the footprint, so sampling at an
// integer coordinate needs only the one stored cell; this is what makes the
// last row/column reachable.
struct BilinearSupport {
  int x0 = 0;
  int y0 = 0;
  float fx = 0.f;  // weight toward x0+1
  float fy = 0.f;  // weight toward y0+1
  bool use_x1 = false;
  bool use_y1 = false;
};

// nullopt when the location is non-finite or any needed cell lies outside the
// grid. No clamping and no extrapolation: an out-of-bounds sample is invalid.
std::optional<BilinearSupport> bilinear_support(Vec2f at, int width, int height);

struct FlowSample {
  Vec2f value;
  bool in_bounds = false;
};

struct PixelSample {
  Vec3f value;
  bool in_bounds = false;
};

FlowSample bilinear_sample(const FlowField& grid, Vec2f at);
PixelSample bilinear_sample(const Frame& grid, Vec2f at);

struct WarpResult {
  Frame frame;
  Mask validity;  // true where the sample landed fully inside the source grid
};

// Backward warp: output pixel x takes bilinear_sample(src, x + flow(x)).
WarpResult warp_frame(const Frame& src, const FlowField& flow);

// round(dim * scale), never below 1.
int scaled_dim(int dim, double scale);

// Bilinear spatial resampling with displacement components multiplied by the
// nominal scale factor, so values stay in pixel units of the new resolution.
FlowField resize_flow(const FlowField& flow, double scale);

// Resampling to explicit dimensions; displacements are rescaled per axis by
// the effective ratio dst/src. This is the exact inverse-dims path the
// completion pipeline uses to return stage outputs to full resolution.
FlowField resize_flow_to(const FlowField& flow, int dst_width, int dst_height);

// Nearest-neighbor: a resized cell is missing iff its nearest source cell is.
Mask resize_mask(const Mask& mask, double scale);
Mask resize_mask_to(const Mask& mask, int dst_width, int dst_height);

}  // namespace flowfill
