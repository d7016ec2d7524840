#include <png.h>

#include <csetjmp>
#include <cstdio>
#include <memory>

#include "flowfill/flow_io.hpp"

namespace flowfill {

namespace {

struct FileCloser {
  void operator()(std::FILE* f) const {
    if (f) std::fclose(f);
  }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

struct PngReader {
  png_structp png = nullptr;
  png_infop info = nullptr;
  PngReader() {
    png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (png) info = png_create_info_struct(png);
    if (!png || !info) throw Error("libpng allocation failed");
  }
  ~PngReader() { png_destroy_read_struct(&png, &info, nullptr); }
  PngReader(const PngReader&) = delete;
  PngReader& operator=(const PngReader&) = delete;
};

struct PngWriter {
  png_structp png = nullptr;
  png_infop info = nullptr;
  PngWriter() {
    png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (png) info = png_create_info_struct(png);
    if (!png || !info) throw Error("libpng allocation failed");
  }
  ~PngWriter() { png_destroy_write_struct(&png, &info); }
  PngWriter(const PngWriter&) = delete;
  PngWriter& operator=(const PngWriter&) = delete;
};

// Decodes an 8-bit PNG into a packed buffer with the requested channel count
// (3 = RGB frame, 1 = gray mask). 16-bit inputs are rejected.
void read_png_8bit(const std::string& path, int channels, int dimension_cap,
                   int& width, int& height, std::vector<std::uint8_t>& pixels) {
  FilePtr fp(std::fopen(path.c_str(), "rb"));
  if (!fp) throw Error("cannot open " + path);

  PngReader r;
  std::vector<png_bytep> rows;
  if (setjmp(png_jmpbuf(r.png))) {
    throw FormatError(path + ": libpng failed to decode");
  }
  png_init_io(r.png, fp.get());
  png_set_user_limits(r.png, static_cast<png_uint_32>(dimension_cap),
                      static_cast<png_uint_32>(dimension_cap));
  png_read_info(r.png, r.info);

  const png_uint_32 w = png_get_image_width(r.png, r.info);
  const png_uint_32 h = png_get_image_height(r.png, r.info);
  const int depth = png_get_bit_depth(r.png, r.info);
  const int color = png_get_color_type(r.png, r.info);
  if (depth > 8) {
    throw FormatError(path + ": unsupported bit depth " + std::to_string(depth));
  }
  if (channels == 3) {
    if (color == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(r.png);
    if (color == PNG_COLOR_TYPE_GRAY || color == PNG_COLOR_TYPE_GRAY_ALPHA) {
      png_set_gray_to_rgb(r.png);
    }
    if (depth < 8) png_set_packing(r.png);
    if (color & PNG_COLOR_MASK_ALPHA) png_set_strip_alpha(r.png);
    if (png_get_valid(r.png, r.info, PNG_INFO_tRNS)) {
      png_set_tRNS_to_alpha(r.png);
      png_set_strip_alpha(r.png);
    }
  } else {
    if (color != PNG_COLOR_TYPE_GRAY && color != PNG_COLOR_TYPE_GRAY_ALPHA) {
      throw FormatError(path + ": mask must be a single-channel gray PNG");
    }
    if (depth < 8) png_set_expand_gray_1_2_4_to_8(r.png);
    if (color & PNG_COLOR_MASK_ALPHA) png_set_strip_alpha(r.png);
  }
  png_read_update_info(r.png, r.info);
  if (png_get_channels(r.png, r.info) != static_cast<png_byte>(channels)) {
    throw FormatError(path + ": expected " + std::to_string(channels) +
                      " channels after decode");
  }

  width = static_cast<int>(w);
  height = static_cast<int>(h);
  pixels.assign(static_cast<std::size_t>(width) * height * channels, 0);
  rows.resize(h);
  const std::size_t stride = static_cast<std::size_t>(width) * channels;
  for (png_uint_32 y = 0; y < h; ++y) {
    rows[y] = pixels.data() + y * stride;
  }
  png_read_image(r.png, rows.data());
  png_read_end(r.png, nullptr);
}

void write_png_8bit(const std::string& path, int channels, int width, int height,
                    const std::vector<std::uint8_t>& pixels) {
  FilePtr fp(std::fopen(path.c_str(), "wb"));
  if (!fp) throw Error("cannot open " + path + " for writing");

  PngWriter w;
  std::vector<png_bytep> rows(height);
  const std::size_t stride = static_cast<std::size_t>(width) * channels;
  for (int y = 0; y < height; ++y) {
    rows[y] = const_cast<png_bytep>(pixels.data() + y * stride);
  }
  if (setjmp(png_jmpbuf(w.png))) {
    throw Error(path + ": libpng failed to encode");
  }
  png_init_io(w.png, fp.get());
  png_set_IHDR(w.png, w.info, static_cast<png_uint_32>(width),
               static_cast<png_uint_32>(height), 8,
               channels == 3 ? PNG_COLOR_TYPE_RGB : PNG_COLOR_TYPE_GRAY,
               PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT,
               PNG_FILTER_TYPE_DEFAULT);
  png_write_info(w.png, w.info);
  png_write_image(w.png, rows.data());
  png_write_end(w.png, nullptr);
}

}  // namespace

Frame read_frame_png(const std::string& path, int dimension_cap) {
  Frame frame;
  read_png_8bit(path, 3, dimension_cap, frame.width, frame.height, frame.rgb);
  return frame;
}

void write_frame_png(const Frame& frame, const std::string& path) {
  write_png_8bit(path, 3, frame.width, frame.height, frame.rgb);
}

Mask read_mask_png(const std::string& path, int dimension_cap) {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> gray;
  read_png_8bit(path, 1, dimension_cap, width, height, gray);
  for (auto& v : gray) v = v ? 1 : 0;  // nonzero == missing
  return Mask(width, height, std::move(gray));
}

void write_mask_png(const Mask& mask, const std::string& path) {
  std::vector<std::uint8_t> gray(mask.bits().size());
  for (std::size_t i = 0; i < gray.size(); ++i) {
    gray[i] = mask.bits()[i] ? 255 : 0;
  }
  write_png_8bit(path, 1, mask.width(), mask.height(), gray);
}

}  // namespace flowfill
