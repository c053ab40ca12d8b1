// colorspace.hpp
//
// Conversions between linear RGB, the cone-shaped hue/chroma/value solid
// (HCV), and the k-free subalgebra elements the white-balance transform
// operates on.  HCV uses the hexcone model: V = max channel,
// C = max - min, H = hexagonal hue in radians with pure red at 0; the cone
// condition C <= V is what guarantees that a pixel, read as the element
// V + C cos(H) i + C sin(H) j, lies in the positivity domain.
//
// Two alternative hue parameterisations are provided as strictly
// increasing remaps of [0, 2pi].  Both fix red:
//
//   f1(x) = (1/4) (7x - 3 x^2 / (2pi))
//
// moves green (2pi/3) onto cyan's position (pi), placing it opposite red;
// f2 is the continuous two-piece quadratic through
// (0,0), (pi/3, 2pi/3), (2pi/3, pi), (4pi/3, 5pi/3), (2pi, 2pi), which in
// addition moves yellow opposite blue.  Working "in H1CV / H2CV" means
// pulling hues back through the inverse map, transforming, and mapping
// forward again.

#pragma once

#include "splitcat/errors.hpp"
#include "splitcat/jordan.hpp"
#include "splitcat/split_quaternion.hpp"

namespace splitcat {

// Linear-light RGB sample.  Channels live in [0, 1] for stored images;
// intermediate pipeline values may exceed 1 until clip_normalize runs.
struct RgbPixel {
  double r = 0.0, g = 0.0, b = 0.0;
};

// Hue (radians, [0, 2pi)), chroma and value, with the cone condition
// c <= v.  Value may exceed 1 transiently inside the pipeline.
struct HcvPixel {
  double h = 0.0, c = 0.0, v = 0.0;
};

// Which hue parameterisation a transform runs in.
enum class HueRemap { Identity, F1, F2 };

// Hexcone analysis of an RGB sample.  Achromatic pixels get h = 0 by
// convention.  Throws DomainError on non-finite input.
HcvPixel rgb_to_hcv(const RgbPixel& p);

// Hexcone synthesis; inverse of rgb_to_hcv on the cone.
RgbPixel hcv_to_rgb(const HcvPixel& p);

// Strictly increasing hue remap of [0, 2pi], extended 2pi-periodically.
// Throws DomainError on non-finite input.
double hue_forward(HueRemap m, double x);

// Inverse remap, via the closed-form quadratic roots.
double hue_inverse(HueRemap m, double y);

// The element V + C cos(H) i + C sin(H) j.  With c <= v this lands in the
// positivity domain closure.
S0Element hcv_to_s0(const HcvPixel& p);

// Inverse of hcv_to_s0: v = q0, c = sqrt(q1^2 + q2^2), h = atan2(q2, q1)
// wrapped to [0, 2pi).  Accepts small numerical spill past the cone
// boundary and clamps it; anything beyond the tolerance throws
// OutsideCone, which signals a pipeline bug (the sandwich preserves the
// cone).
HcvPixel s0_to_hcv(const S0Element& q);

// The effect whose parameters are the illuminant's HCV coordinates:
// (e0, e1, e2) = (V, C cos H, C sin H).  Throws DegenerateIlluminant when
// v is (numerically) zero or when c is within relative 1e-9 of v — on the
// light-like boundary the inverse square root diverges.
Effect effect_from_illuminant(const HcvPixel& L);

// sRGB transfer function on a normalised channel value in [0, 1].
double srgb_decode(double c);  // encoded -> linear
double srgb_encode(double c);  // linear -> encoded (input clamped to [0, 1])

}  // namespace splitcat
