#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "flowfill/types.hpp"

namespace flowfill {

// Headers are validated against this before any allocation happens.
inline constexpr int kDefaultDimensionCap = 16384;

// Middlebury .flo: float magic 202021.25, little-endian int32 width and
// height, then height*width interleaved (dx, dy) little-endian float32.
FlowField read_flo(std::span<const std::uint8_t> bytes,
                   Direction direction = Direction::Forward,
                   int dimension_cap = kDefaultDimensionCap);
std::vector<std::uint8_t> write_flo(const FlowField& flow);

FlowField load_flo(const std::string& path, Direction direction = Direction::Forward,
                   int dimension_cap = kDefaultDimensionCap);
void save_flo(const FlowField& flow, const std::string& path);

// 8-bit PNG rasters. Frames are RGB (palette and gray inputs are expanded,
// alpha is stripped); masks are single-channel gray with nonzero == missing.
// 16-bit inputs are rejected with FormatError.
Frame read_frame_png(const std::string& path, int dimension_cap = kDefaultDimensionCap);
void write_frame_png(const Frame& frame, const std::string& path);
Mask read_mask_png(const std::string& path, int dimension_cap = kDefaultDimensionCap);
void write_mask_png(const Mask& mask, const std::string& path);

// One JSON document listing relative paths for a whole sequence; see
// docs/formats.md for the schema. Ground-truth entries are optional and only
// used for metric reports.
struct SequenceManifest {
  int width = 0;
  int height = 0;
  std::vector<std::string> frame_paths;
  std::vector<std::string> mask_paths;
  std::vector<std::string> fwd_flow_paths;
  std::vector<std::string> bwd_flow_paths;
  std::vector<std::string> gt_frame_paths;
  std::vector<std::string> gt_fwd_flow_paths;
  std::vector<std::string> gt_bwd_flow_paths;
  std::string maskgen_echo;  // raw JSON object echoed by synth-masks, may be empty
  std::string base_dir;      // set by read_manifest; paths resolve against it

  void validate() const;  // list-length and range checks, throws ConfigError
  bool has_gt_frames() const { return !gt_frame_paths.empty(); }
  bool has_gt_flows() const {
    return !gt_fwd_flow_paths.empty() && !gt_bwd_flow_paths.empty();
  }
};

SequenceManifest read_manifest(const std::string& path);
void write_manifest(const SequenceManifest& manifest, const std::string& path);

// Loads and validates every file referenced by the manifest. Any mismatch is
// reported with the offending file's path.
SequenceBundle load_sequence(const SequenceManifest& manifest);

std::vector<Frame> load_gt_frames(const SequenceManifest& manifest);
// Returns forward and backward ground-truth flows.
std::pair<std::vector<FlowField>, std::vector<FlowField>> load_gt_flows(
    const SequenceManifest& manifest);

}  // namespace flowfill
