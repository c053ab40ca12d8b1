#include "splitcat/png_io.hpp"

#include <png.h>

#include <cmath>
#include <cstdio>
#include <memory>
#include <vector>

namespace splitcat {

namespace {

struct FileCloser {
  void operator()(std::FILE* f) const {
    if (f) std::fclose(f);
  }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

// libpng's default error handler prints to stderr before the longjmp; we
// report through exceptions instead, so keep the library quiet.
extern "C" void quiet_png_error(png_structp png, png_const_charp) {
  longjmp(png_jmpbuf(png), 1);
}
extern "C" void quiet_png_warning(png_structp, png_const_charp) {}

}  // namespace

PngImage read_png(const std::string& path) {
  FilePtr file(std::fopen(path.c_str(), "rb"));
  if (!file) {
    throw IoError("cannot open image: " + path);
  }

  png_structp png =
      png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, quiet_png_error, quiet_png_warning);
  if (!png) throw IoError("libpng initialisation failed");
  png_infop info = png_create_info_struct(png);
  if (!info) {
    png_destroy_read_struct(&png, nullptr, nullptr);
    throw IoError("libpng initialisation failed");
  }
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_read_struct(&png, &info, nullptr);
    throw IoError("failed to decode PNG: " + path);
  }

  png_init_io(png, file.get());
  png_read_info(png, info);

  const png_byte color_type = png_get_color_type(png, info);
  const png_byte depth = png_get_bit_depth(png, info);

  // Normalise every variant to 8- or 16-bit RGB.
  if (color_type == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(png);
  if (color_type == PNG_COLOR_TYPE_GRAY && depth < 8) {
    png_set_expand_gray_1_2_4_to_8(png);
  }
  if (png_get_valid(png, info, PNG_INFO_tRNS)) png_set_tRNS_to_alpha(png);
  if (color_type == PNG_COLOR_TYPE_GRAY ||
      color_type == PNG_COLOR_TYPE_GRAY_ALPHA) {
    png_set_gray_to_rgb(png);
  }
  png_set_strip_alpha(png);
  if (depth == 16) {
    // PNG stores 16-bit samples big-endian; flip to host order.
    png_set_swap(png);
  }
  png_read_update_info(png, info);

  const png_uint_32 width = png_get_image_width(png, info);
  const png_uint_32 height = png_get_image_height(png, info);
  const int out_depth = png_get_bit_depth(png, info);
  if (png_get_channels(png, info) != 3 || (out_depth != 8 && out_depth != 16)) {
    png_destroy_read_struct(&png, &info, nullptr);
    throw IoError("unsupported PNG layout: " + path);
  }

  const size_t row_bytes = png_get_rowbytes(png, info);
  std::vector<png_byte> data(row_bytes * height);
  std::vector<png_bytep> rows(height);
  for (png_uint_32 y = 0; y < height; ++y) {
    rows[y] = data.data() + y * row_bytes;
  }
  png_read_image(png, rows.data());
  png_read_end(png, nullptr);
  png_destroy_read_struct(&png, &info, nullptr);

  PngImage result;
  result.bit_depth = out_depth;
  result.image = Image(static_cast<int>(width), static_cast<int>(height));
  const double scale = out_depth == 8 ? 255.0 : 65535.0;
  for (png_uint_32 y = 0; y < height; ++y) {
    for (png_uint_32 x = 0; x < width; ++x) {
      double r, g, b;
      if (out_depth == 8) {
        const png_byte* px = rows[y] + 3 * x;
        r = px[0];
        g = px[1];
        b = px[2];
      } else {
        const png_uint_16* px =
            reinterpret_cast<const png_uint_16*>(rows[y]) + 3 * x;
        r = px[0];
        g = px[1];
        b = px[2];
      }
      result.image.at(static_cast<int>(x), static_cast<int>(y)) = {
          r / scale, g / scale, b / scale};
    }
  }
  return result;
}

void write_png(const std::string& path, const Image& img, int bit_depth) {
  if (bit_depth != 8 && bit_depth != 16) {
    throw DomainError("PNG bit depth must be 8 or 16");
  }
  if (img.width <= 0 || img.height <= 0 ||
      img.pixels.size() !=
          static_cast<size_t>(img.width) * static_cast<size_t>(img.height)) {
    throw DomainError("image buffer does not match its dimensions");
  }

  FilePtr file(std::fopen(path.c_str(), "wb"));
  if (!file) {
    throw IoError("cannot create image: " + path);
  }

  png_structp png =
      png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, quiet_png_error, quiet_png_warning);
  if (!png) throw IoError("libpng initialisation failed");
  png_infop info = png_create_info_struct(png);
  if (!info) {
    png_destroy_write_struct(&png, nullptr);
    throw IoError("libpng initialisation failed");
  }
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    throw IoError("failed to encode PNG: " + path);
  }

  png_init_io(png, file.get());
  png_set_IHDR(png, info, static_cast<png_uint_32>(img.width),
               static_cast<png_uint_32>(img.height), bit_depth,
               PNG_COLOR_TYPE_RGB, PNG_INTERLACE_NONE,
               PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);
  if (bit_depth == 16) png_set_swap(png);

  const double scale = bit_depth == 8 ? 255.0 : 65535.0;
  auto quantise = [scale](double c) -> unsigned {
    c = std::min(std::max(c, 0.0), 1.0);
    return static_cast<unsigned>(std::lround(c * scale));
  };

  if (bit_depth == 8) {
    std::vector<png_byte> row(static_cast<size_t>(img.width) * 3);
    for (int y = 0; y < img.height; ++y) {
      for (int x = 0; x < img.width; ++x) {
        const RgbPixel& px = img.at(x, y);
        row[3 * x + 0] = static_cast<png_byte>(quantise(px.r));
        row[3 * x + 1] = static_cast<png_byte>(quantise(px.g));
        row[3 * x + 2] = static_cast<png_byte>(quantise(px.b));
      }
      png_write_row(png, row.data());
    }
  } else {
    std::vector<png_uint_16> row(static_cast<size_t>(img.width) * 3);
    for (int y = 0; y < img.height; ++y) {
      for (int x = 0; x < img.width; ++x) {
        const RgbPixel& px = img.at(x, y);
        row[3 * x + 0] = static_cast<png_uint_16>(quantise(px.r));
        row[3 * x + 1] = static_cast<png_uint_16>(quantise(px.g));
        row[3 * x + 2] = static_cast<png_uint_16>(quantise(px.b));
      }
      png_write_row(png, reinterpret_cast<png_bytep>(row.data()));
    }
  }
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
}

}  // namespace splitcat
