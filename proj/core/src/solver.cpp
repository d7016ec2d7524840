#include "flowfill/solver.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace flowfill {

namespace {

// Classic optimal relaxation factor for the 5-point Laplacian on an n-cell
// span. Over-relaxing a smaller hole with a grid-sized omega stays convergent
// (rho = omega - 1 for omega >= optimal), so the bounding box is a safe bound.
double sor_omega(int span) {
  const double s = std::sin(std::numbers::pi / (span + 1));
  return 2.0 / (1.0 + s);
}

struct MaskedBounds {
  int x_min = 0, x_max = -1, y_min = 0, y_max = -1;
  bool empty() const { return x_max < x_min; }
  int max_span() const { return std::max(x_max - x_min, y_max - y_min) + 1; }
};

MaskedBounds masked_bounds(const Mask& mask) {
  MaskedBounds b{mask.width(), -1, mask.height(), -1};
  for (int y = 0; y < mask.height(); ++y) {
    for (int x = 0; x < mask.width(); ++x) {
      if (mask.missing(x, y)) {
        b.x_min = std::min(b.x_min, x);
        b.x_max = std::max(b.x_max, x);
        b.y_min = std::min(b.y_min, y);
        b.y_max = std::max(b.y_max, y);
      }
    }
  }
  return b;
}

}  // namespace

int harmonic_fill_plane(std::vector<double>& plane, int width, int height,
                        const Mask& mask, const HarmonicSolveOptions& options,
                        HarmonicInit init) {
  if (mask.width() != width || mask.height() != height) {
    throw DimensionError("harmonic_fill_plane: mask is " + std::to_string(mask.width()) +
                         "x" + std::to_string(mask.height()) + " but plane is " +
                         std::to_string(width) + "x" + std::to_string(height));
  }
  if (plane.size() != static_cast<std::size_t>(width) * height) {
    throw DimensionError("harmonic_fill_plane: plane size does not match dimensions");
  }

  const MaskedBounds bounds = masked_bounds(mask);
  if (bounds.empty()) {
    return 0;  // nothing to solve
  }
  const long missing = mask.count_missing();
  if (missing == static_cast<long>(width) * height) {
    throw Error("harmonic_fill_plane: every cell is masked, no boundary data");
  }

  const auto at = [&](int x, int y) -> double& {
    return plane[static_cast<std::size_t>(y) * width + x];
  };

  if (init == HarmonicInit::MeanOfKnown) {
    double sum = 0.0;
    for (int y = 0; y < height; ++y) {
      for (int x = 0; x < width; ++x) {
        if (!mask.missing(x, y)) sum += at(x, y);
      }
    }
    const double mean = sum / static_cast<double>(width * static_cast<long>(height) - missing);
    for (int y = 0; y < height; ++y) {
      for (int x = 0; x < width; ++x) {
        if (mask.missing(x, y)) at(x, y) = mean;
      }
    }
  }

  const double omega = sor_omega(bounds.max_span());

  int iterations = 0;
  while (iterations < options.max_iterations) {
    ++iterations;
    double max_update = 0.0;
    // color 0 = red (x + y even), color 1 = black
    for (int color = 0; color < 2; ++color) {
      for (int y = bounds.y_min; y <= bounds.y_max; ++y) {
        int x = bounds.x_min + ((bounds.x_min + y) % 2 == color ? 0 : 1);
        for (; x <= bounds.x_max; x += 2) {
          if (!mask.missing(x, y)) continue;
          double sum = 0.0;
          int count = 0;
          if (x > 0) { sum += at(x - 1, y); ++count; }
          if (x + 1 < width) { sum += at(x + 1, y); ++count; }
          if (y > 0) { sum += at(x, y - 1); ++count; }
          if (y + 1 < height) { sum += at(x, y + 1); ++count; }
          const double target = sum / count;
          const double update = omega * (target - at(x, y));
          at(x, y) += update;
          max_update = std::max(max_update, std::abs(update));
        }
      }
    }
    if (max_update < options.tolerance) break;
  }
  return iterations;
}

}  // namespace flowfill
