// cat.hpp
//
// The chromatic adaptation transforms.  The split transform works per
// pixel: read the pixel in HCV (optionally through a remapped hue axis),
// embed it as the element q = V + C cos(H) i + C sin(H) j, and replace it
// by the conjugation-free sandwich
//
//   q' = p^{-1/2} q p^{-1/2}
//
// where p is the element built the same way from the illuminant.  The
// illuminant pixel itself maps to 1 (pure white at full value) because its
// polar factors commute; achromatic illuminants reduce to a plain
// division by the illuminant value.  The von Kries transform — channelwise
// division by the illuminant in linear RGB — is the classical baseline.
//
// Both transforms finish with clip_normalize: if any channel of the
// result exceeds 1, the whole image is divided by the global maximum, so
// relative color is preserved rather than per-pixel clamped.

#pragma once

#include <string>
#include <vector>

#include "splitcat/colorspace.hpp"
#include "splitcat/errors.hpp"

namespace splitcat {

// Row-major raster of linear-light RGB pixels.
struct Image {
  int width = 0;
  int height = 0;
  std::vector<RgbPixel> pixels;

  Image() = default;
  Image(int w, int h, RgbPixel fill = {});

  RgbPixel& at(int x, int y) { return pixels[static_cast<size_t>(y) * width + x]; }
  const RgbPixel& at(int x, int y) const {
    return pixels[static_cast<size_t>(y) * width + x];
  }
};

// Which adaptation transform to run.
enum class CatKind { VonKries, SplitHcv, SplitH1cv, SplitH2cv };

// The hue parameterisation a split transform kind runs in.
// Throws DomainError for VonKries, which has no hue axis.
HueRemap remap_of(CatKind kind);

// Parse/format the CLI spelling of a transform kind
// ("vonkries", "split-hcv", "split-h1cv", "split-h2cv").
CatKind cat_kind_from_name(const std::string& name);
const char* cat_kind_name(CatKind kind);

// Split transform without the final range normalisation; exposed so the
// white-point property (illuminant pixel -> value exactly 1) can be
// observed before any global rescale.  The illuminant is given in HCV.
// Throws DegenerateIlluminant when the illuminant is unusable.
Image split_cat_unclipped(const Image& img, const HcvPixel& L,
                          HueRemap remap);

// Full split transform: split_cat_unclipped followed by clip_normalize.
Image split_cat(const Image& img, const HcvPixel& L, HueRemap remap);

// Channelwise division by the illuminant, then clip_normalize.
// Throws DegenerateIlluminant when any illuminant channel is <= 1e-6.
Image von_kries(const Image& img, const RgbPixel& L_rgb);

// If the global maximum channel value exceeds 1, divide every channel by
// it; otherwise return the image unchanged.
Image clip_normalize(const Image& img);

// Run the selected transform with an illuminant given as linear RGB
// (converted through rgb_to_hcv for the split kinds).
Image apply_cat(const Image& img, CatKind kind, const RgbPixel& illuminant);

}  // namespace splitcat
