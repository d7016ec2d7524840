#pragma once

#include <vector>

#include "flowfill/types.hpp"

namespace flowfill {

struct HarmonicSolveOptions {
  double tolerance = 1e-4;   // stop once the largest per-cell update is below this
  int max_iterations = 10000;
};

enum class HarmonicInit {
  MeanOfKnown,  // masked cells start at the mean of all known cells
  WarmStart,    // masked cells keep their incoming values
};

// Solves the discrete Laplace equation on the masked cells of a row-major
// plane: each masked cell converges to the average of its in-grid neighbors,
// with known cells as fixed boundary data. Red-black successive
// over-relaxation; omega is derived from the masked region's bounding box,
// which keeps the stopping error a small multiple of the tolerance.
//
// Returns the number of full sweeps performed. Throws Error when every cell
// is masked (no boundary data) and DimensionError on size mismatch.
int harmonic_fill_plane(std::vector<double>& plane, int width, int height,
                        const Mask& mask, const HarmonicSolveOptions& options,
                        HarmonicInit init = HarmonicInit::MeanOfKnown);

}  // namespace flowfill
