#include "splitcat/cat.hpp"

#include <algorithm>
#include <cmath>

namespace splitcat {

Image::Image(int w, int h, RgbPixel fill)
    : width(w), height(h) {
  if (w <= 0 || h <= 0) {
    throw DomainError("image dimensions must be positive");
  }
  pixels.assign(static_cast<size_t>(w) * static_cast<size_t>(h), fill);
}

HueRemap remap_of(CatKind kind) {
  switch (kind) {
    case CatKind::SplitHcv:
      return HueRemap::Identity;
    case CatKind::SplitH1cv:
      return HueRemap::F1;
    case CatKind::SplitH2cv:
      return HueRemap::F2;
    case CatKind::VonKries:
      break;
  }
  throw DomainError("von Kries has no hue parameterisation");
}

CatKind cat_kind_from_name(const std::string& name) {
  if (name == "vonkries") return CatKind::VonKries;
  if (name == "split-hcv") return CatKind::SplitHcv;
  if (name == "split-h1cv") return CatKind::SplitH1cv;
  if (name == "split-h2cv") return CatKind::SplitH2cv;
  throw DomainError("unknown transform kind: " + name);
}

const char* cat_kind_name(CatKind kind) {
  switch (kind) {
    case CatKind::VonKries:
      return "vonkries";
    case CatKind::SplitHcv:
      return "split-hcv";
    case CatKind::SplitH1cv:
      return "split-h1cv";
    case CatKind::SplitH2cv:
      return "split-h2cv";
  }
  return "?";
}

Image split_cat_unclipped(const Image& img, const HcvPixel& L,
                          HueRemap remap) {
  // The whole transform happens in the remapped hue space, illuminant
  // included.
  const HcvPixel L_remapped{hue_inverse(remap, L.h), L.c, L.v};
  effect_from_illuminant(L_remapped);  // reject degenerate illuminants
  const S0Element p = hcv_to_s0(L_remapped);
  const S0Element a = inv_sqrt(p);

  Image out = img;
  for (RgbPixel& px : out.pixels) {
    HcvPixel hcv = rgb_to_hcv(px);
    hcv.h = hue_inverse(remap, hcv.h);
    const S0Element q = hcv_to_s0(hcv);
    HcvPixel res = s0_to_hcv(sandwich(a, q));
    res.h = hue_forward(remap, res.h);
    px = hcv_to_rgb(res);
  }
  return out;
}

Image split_cat(const Image& img, const HcvPixel& L, HueRemap remap) {
  return clip_normalize(split_cat_unclipped(img, L, remap));
}

Image von_kries(const Image& img, const RgbPixel& L_rgb) {
  if (L_rgb.r <= 1e-6 || L_rgb.g <= 1e-6 || L_rgb.b <= 1e-6) {
    throw DegenerateIlluminant(
        "von Kries illuminant has a (near) zero channel");
  }
  Image out = img;
  for (RgbPixel& px : out.pixels) {
    px = {px.r / L_rgb.r, px.g / L_rgb.g, px.b / L_rgb.b};
  }
  return clip_normalize(out);
}

Image clip_normalize(const Image& img) {
  double max_channel = 0.0;
  for (const RgbPixel& px : img.pixels) {
    max_channel = std::max({max_channel, px.r, px.g, px.b});
  }
  if (max_channel <= 1.0) return img;
  Image out = img;
  for (RgbPixel& px : out.pixels) {
    px = {px.r / max_channel, px.g / max_channel, px.b / max_channel};
  }
  return out;
}

Image apply_cat(const Image& img, CatKind kind, const RgbPixel& illuminant) {
  if (kind == CatKind::VonKries) {
    return von_kries(img, illuminant);
  }
  return split_cat(img, rgb_to_hcv(illuminant), remap_of(kind));
}

}  // namespace splitcat
