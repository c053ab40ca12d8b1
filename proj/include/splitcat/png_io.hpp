// png_io.hpp
//
// Minimal PNG reader/writer for the pipeline: 8- and 16-bit RGB images.
// Reading expands palette/gray/alpha variants to plain RGB and normalises
// channel codes to doubles in [0, 1]; no transfer function is applied
// (whether the codes are sRGB-encoded or linear is the caller's business,
// steered by the CLI's --assume-srgb / --assume-linear flags).  Writing
// quantises [0, 1] channels to the requested bit depth.

#pragma once

#include <string>

#include "splitcat/cat.hpp"
#include "splitcat/errors.hpp"

namespace splitcat {

// A decoded image plus the bit depth it was stored at (8 or 16), so a
// processed image can be written back at the depth it came in with.
struct PngImage {
  Image image;
  int bit_depth = 8;
};

// Throws IoError on unreadable or malformed files.
PngImage read_png(const std::string& path);

// bit_depth must be 8 or 16.  Channels are clamped to [0, 1] and rounded
// to the nearest code.  Throws IoError / DomainError.
void write_png(const std::string& path, const Image& img, int bit_depth);

}  // namespace splitcat
