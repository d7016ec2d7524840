#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>

#include "flowfill/flow_io.hpp"

namespace flowfill {

namespace {

constexpr float kFloMagic = 202021.25f;  // spells "PIEH" in little-endian bytes

static_assert(std::endian::native == std::endian::little,
              "flo serialization assumes a little-endian host");

template <typename T>
T read_le(std::span<const std::uint8_t> bytes, std::size_t offset) {
  T value;
  std::memcpy(&value, bytes.data() + offset, sizeof(T));
  return value;
}

template <typename T>
void append_le(std::vector<std::uint8_t>& out, T value) {
  const auto* p = reinterpret_cast<const std::uint8_t*>(&value);
  out.insert(out.end(), p, p + sizeof(T));
}

}  // namespace

FlowField read_flo(std::span<const std::uint8_t> bytes, Direction direction,
                   int dimension_cap) {
  if (bytes.size() < 12) {
    throw FormatError("flo header truncated", static_cast<long>(bytes.size()));
  }
  const float magic = read_le<float>(bytes, 0);
  if (magic != kFloMagic) {
    throw FormatError("flo magic mismatch (expected 202021.25)", 0);
  }
  const std::int32_t width = read_le<std::int32_t>(bytes, 4);
  const std::int32_t height = read_le<std::int32_t>(bytes, 8);
  if (width < 1 || height < 1 || width > dimension_cap || height > dimension_cap) {
    throw FormatError("flo dimensions " + std::to_string(width) + "x" +
                          std::to_string(height) + " outside [1, " +
                          std::to_string(dimension_cap) + "]",
                      4);
  }
  const std::size_t expected = 12 + static_cast<std::size_t>(width) * height * 2 * 4;
  if (bytes.size() < expected) {
    throw FormatError("flo payload truncated, expected " + std::to_string(expected) +
                          " bytes",
                      static_cast<long>(bytes.size()));
  }
  FlowField flow(width, height, direction);
  std::memcpy(flow.data.data(), bytes.data() + 12, flow.data.size() * 4);
  for (std::size_t i = 0; i < flow.data.size(); ++i) {
    if (!std::isfinite(flow.data[i])) {
      throw FormatError("flo payload contains a non-finite component",
                        static_cast<long>(12 + i * 4));
    }
  }
  return flow;
}

std::vector<std::uint8_t> write_flo(const FlowField& flow) {
  if (!flow.all_finite()) {
    throw Error("write_flo: flow contains non-finite components");
  }
  std::vector<std::uint8_t> out;
  out.reserve(12 + flow.data.size() * 4);
  append_le(out, kFloMagic);
  append_le(out, static_cast<std::int32_t>(flow.width));
  append_le(out, static_cast<std::int32_t>(flow.height));
  const auto* p = reinterpret_cast<const std::uint8_t*>(flow.data.data());
  out.insert(out.end(), p, p + flow.data.size() * 4);
  return out;
}

FlowField load_flo(const std::string& path, Direction direction, int dimension_cap) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error("cannot open " + path);
  }
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  try {
    return read_flo(bytes, direction, dimension_cap);
  } catch (const FormatError& e) {
    throw FormatError(path + ": " + e.what());
  }
}

void save_flo(const FlowField& flow, const std::string& path) {
  const std::vector<std::uint8_t> bytes = write_flo(flow);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw Error("cannot open " + path + " for writing");
  }
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) {
    throw Error("short write to " + path);
  }
}

}  // namespace flowfill
