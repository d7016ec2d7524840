#include "flowfill/sampling.hpp"

#include <algorithm>
#include <cmath>

namespace flowfill {

std::optional<BilinearSupport> bilinear_support(Vec2f at, int width, int height) {
  if (!std::isfinite(at.x) || !std::isfinite(at.y)) {
    return std::nullopt;
  }
  const float xf = std::floor(at.x);
  const float yf = std::floor(at.y);
  BilinearSupport s;
  s.x0 = static_cast<int>(xf);
  s.y0 = static_cast<int>(yf);
  s.fx = at.x - xf;
  s.fy = at.y - yf;
  s.use_x1 = s.fx > 0.f;
  s.use_y1 = s.fy > 0.f;
  if (s.x0 < 0 || s.y0 < 0) return std::nullopt;
  const int x_hi = s.use_x1 ? s.x0 + 1 : s.x0;
  const int y_hi = s.use_y1 ? s.y0 + 1 : s.y0;
  if (x_hi >= width || y_hi >= height) return std::nullopt;
  return s;
}

namespace {

// Gathers channels channels at the support location; out must hold them all.
template <int Channels, typename T>
void gather(const std::vector<T>& data, int width, const BilinearSupport& s,
            float* out) {
  const auto idx = [&](int x, int y) {
    return (static_cast<std::size_t>(y) * width + x) * Channels;
  };
  const float w00 = (1.f - s.fx) * (1.f - s.fy);
  const float w10 = s.fx * (1.f - s.fy);
  const float w01 = (1.f - s.fx) * s.fy;
  const float w11 = s.fx * s.fy;
  const std::size_t i00 = idx(s.x0, s.y0);
  const std::size_t i10 = s.use_x1 ? idx(s.x0 + 1, s.y0) : i00;
  const std::size_t i01 = s.use_y1 ? idx(s.x0, s.y0 + 1) : i00;
  const std::size_t i11 = (s.use_x1 && s.use_y1) ? idx(s.x0 + 1, s.y0 + 1) : i00;
  for (int c = 0; c < Channels; ++c) {
    out[c] = w00 * static_cast<float>(data[i00 + c]) +
             w10 * static_cast<float>(data[i10 + c]) +
             w01 * static_cast<float>(data[i01 + c]) +
             w11 * static_cast<float>(data[i11 + c]);
  }
}

}  // namespace

FlowSample bilinear_sample(const FlowField& grid, Vec2f at) {
  const auto support = bilinear_support(at, grid.width, grid.height);
  if (!support) return {};
  float v[2];
  gather<2>(grid.data, grid.width, *support, v);
  return {{v[0], v[1]}, true};
}

PixelSample bilinear_sample(const Frame& grid, Vec2f at) {
  const auto support = bilinear_support(at, grid.width, grid.height);
  if (!support) return {};
  float v[3];
  gather<3>(grid.rgb, grid.width, *support, v);
  return {{v[0], v[1], v[2]}, true};
}

WarpResult warp_frame(const Frame& src, const FlowField& flow) {
  if (src.width != flow.width || src.height != flow.height) {
    throw DimensionError("warp_frame: frame is " + std::to_string(src.width) + "x" +
                         std::to_string(src.height) + " but flow is " +
                         std::to_string(flow.width) + "x" + std::to_string(flow.height));
  }
  WarpResult result;
  result.frame = Frame(src.width, src.height, src.index);
  std::vector<std::uint8_t> invalid(static_cast<std::size_t>(src.width) * src.height, 1);
  for (int y = 0; y < src.height; ++y) {
    for (int x = 0; x < src.width; ++x) {
      const Vec2f d = flow.at(x, y);
      const PixelSample s =
          bilinear_sample(src, {static_cast<float>(x) + d.x, static_cast<float>(y) + d.y});
      if (s.in_bounds) {
        result.frame.set(x, y, quantize_channel(s.value.r), quantize_channel(s.value.g),
                         quantize_channel(s.value.b));
        invalid[static_cast<std::size_t>(y) * src.width + x] = 0;
      }
    }
  }
  // Mask polarity: missing == invalid, so flip to get the validity grid.
  for (auto& b : invalid) b = b ? 0 : 1;
  result.validity = Mask(src.width, src.height, std::move(invalid));
  return result;
}

int scaled_dim(int dim, double scale) {
  return std::max(1L, std::lround(dim * scale));
}

namespace {

// Center-aligned source coordinate for destination cell i under ratio src/dst.
inline float src_coord(int i, double ratio) {
  return static_cast<float>((i + 0.5) * ratio - 0.5);
}

FlowField resample_flow(const FlowField& flow, int dst_w, int dst_h,
                        float dx_scale, float dy_scale) {
  if (dst_w == flow.width && dst_h == flow.height && dx_scale == 1.f && dy_scale == 1.f) {
    return flow;
  }
  FlowField out(dst_w, dst_h, flow.direction);
  const double rx = static_cast<double>(flow.width) / dst_w;
  const double ry = static_cast<double>(flow.height) / dst_h;
  const float x_max = static_cast<float>(flow.width - 1);
  const float y_max = static_cast<float>(flow.height - 1);
  for (int y = 0; y < dst_h; ++y) {
    const float sy = std::clamp(src_coord(y, ry), 0.f, y_max);
    for (int x = 0; x < dst_w; ++x) {
      const float sx = std::clamp(src_coord(x, rx), 0.f, x_max);
      const auto support = bilinear_support({sx, sy}, flow.width, flow.height);
      float v[2];
      gather<2>(flow.data, flow.width, *support, v);
      out.set(x, y, v[0] * dx_scale, v[1] * dy_scale);
    }
  }
  return out;
}

Mask resample_mask(const Mask& mask, int dst_w, int dst_h) {
  if (dst_w == mask.width() && dst_h == mask.height()) {
    return mask;
  }
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(dst_w) * dst_h, 0);
  const double rx = static_cast<double>(mask.width()) / dst_w;
  const double ry = static_cast<double>(mask.height()) / dst_h;
  for (int y = 0; y < dst_h; ++y) {
    const int sy = std::clamp<long>(std::lround(src_coord(y, ry)), 0, mask.height() - 1);
    for (int x = 0; x < dst_w; ++x) {
      const int sx = std::clamp<long>(std::lround(src_coord(x, rx)), 0, mask.width() - 1);
      bits[static_cast<std::size_t>(y) * dst_w + x] = mask.missing(sx, sy) ? 1 : 0;
    }
  }
  return Mask(dst_w, dst_h, std::move(bits));
}

}  // namespace

FlowField resize_flow(const FlowField& flow, double scale) {
  if (scale <= 0.0) {
    throw ConfigError("resize_flow: scale must be positive");
  }
  const int dst_w = scaled_dim(flow.width, scale);
  const int dst_h = scaled_dim(flow.height, scale);
  const float s = static_cast<float>(scale);
  return resample_flow(flow, dst_w, dst_h, s, s);
}

FlowField resize_flow_to(const FlowField& flow, int dst_width, int dst_height) {
  if (dst_width < 1 || dst_height < 1) {
    throw ConfigError("resize_flow_to: target dimensions must be positive");
  }
  const float sx = static_cast<float>(dst_width) / static_cast<float>(flow.width);
  const float sy = static_cast<float>(dst_height) / static_cast<float>(flow.height);
  return resample_flow(flow, dst_width, dst_height, sx, sy);
}

Mask resize_mask(const Mask& mask, double scale) {
  if (scale <= 0.0) {
    throw ConfigError("resize_mask: scale must be positive");
  }
  return resample_mask(mask, scaled_dim(mask.width(), scale), scaled_dim(mask.height(), scale));
}

Mask resize_mask_to(const Mask& mask, int dst_width, int dst_height) {
  if (dst_width < 1 || dst_height < 1) {
    throw ConfigError("resize_mask_to: target dimensions must be positive");
  }
  return resample_mask(mask, dst_width, dst_height);
}

}  // namespace flowfill
