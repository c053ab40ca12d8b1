#include "splitcat/colorspace.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace splitcat {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Reduce an angle into the closed interval [0, 2pi].  Values already
// inside pass through untouched so that the endpoint 2pi stays the
// endpoint (the remaps fix it; folding it to 0 would alias the anchor).
double wrap_angle(double x) {
  if (!std::isfinite(x)) {
    throw DomainError("hue must be finite");
  }
  if (x >= 0.0 && x <= kTwoPi) return x;
  double r = std::fmod(x, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  return r;
}

double checked_root(double radicand) {
  // The radicands of the inverse remaps are nonnegative on [0, 2pi] by
  // construction; shave off rounding spill.
  return std::sqrt(std::max(radicand, 0.0));
}

}  // namespace

HcvPixel rgb_to_hcv(const RgbPixel& p) {
  if (!std::isfinite(p.r) || !std::isfinite(p.g) || !std::isfinite(p.b)) {
    throw DomainError("RGB channels must be finite");
  }
  const double v = std::max({p.r, p.g, p.b});
  const double mn = std::min({p.r, p.g, p.b});
  const double c = v - mn;
  double h = 0.0;
  if (c > 0.0) {
    double h6;
    if (v == p.r) {
      h6 = std::fmod((p.g - p.b) / c, 6.0);
      if (h6 < 0.0) h6 += 6.0;
    } else if (v == p.g) {
      h6 = (p.b - p.r) / c + 2.0;
    } else {
      h6 = (p.r - p.g) / c + 4.0;
    }
    h = h6 * (kPi / 3.0);
    if (h >= kTwoPi) h -= kTwoPi;
  }
  return {h, c, v};
}

RgbPixel hcv_to_rgb(const HcvPixel& p) {
  const double h6 = wrap_angle(p.h) * (3.0 / kPi);  // [0, 6)
  const double x = p.c * (1.0 - std::abs(std::fmod(h6, 2.0) - 1.0));
  double r1, g1, b1;
  switch (static_cast<int>(h6)) {
    case 0: r1 = p.c; g1 = x;   b1 = 0.0; break;
    case 1: r1 = x;   g1 = p.c; b1 = 0.0; break;
    case 2: r1 = 0.0; g1 = p.c; b1 = x;   break;
    case 3: r1 = 0.0; g1 = x;   b1 = p.c; break;
    case 4: r1 = x;   g1 = 0.0; b1 = p.c; break;
    default: r1 = p.c; g1 = 0.0; b1 = x;  break;
  }
  const double m = p.v - p.c;
  return {r1 + m, g1 + m, b1 + m};
}

double hue_forward(HueRemap m, double x) {
  const double t = wrap_angle(x);
  switch (m) {
    case HueRemap::Identity:
      return t;
    case HueRemap::F1:
      return 0.25 * (7.0 * t - (3.0 / kTwoPi) * t * t);
    case HueRemap::F2:
      if (t <= kTwoPi / 3.0) {
        return 2.5 * t - (3.0 / kTwoPi) * t * t;
      }
      return 1.75 * t - (3.0 / (8.0 * kPi)) * t * t;
  }
  throw DomainError("unknown hue remap");
}

double hue_inverse(HueRemap m, double y) {
  const double t = wrap_angle(y);
  switch (m) {
    case HueRemap::Identity:
      return t;
    case HueRemap::F1:
      // Smaller root of the remap's quadratic; the other root lies
      // outside [0, 2pi].
      return kPi * (7.0 - checked_root(49.0 - 24.0 * t / kPi)) / 3.0;
    case HueRemap::F2:
      // The forward map sends [0, 2pi/3] onto [0, pi] and [2pi/3, 2pi]
      // onto [pi, 2pi], so the target value selects the piece.
      if (t <= kPi) {
        return (2.5 - checked_root(6.25 - 6.0 * t / kPi)) * (kPi / 3.0);
      }
      return (1.75 - checked_root(3.0625 - 1.5 * t / kPi)) *
             (4.0 * kPi / 3.0);
  }
  throw DomainError("unknown hue remap");
}

S0Element hcv_to_s0(const HcvPixel& p) {
  return {p.v, p.c * std::cos(p.h), p.c * std::sin(p.h)};
}

HcvPixel s0_to_hcv(const S0Element& q) {
  const double c = std::hypot(q.q1, q.q2);
  // The sandwich preserves the cone only up to rounding, so allow a small
  // relative margin plus an absolute one before declaring the value
  // genuinely outside.
  const double slack = 1e-10 * std::max({1.0, std::abs(q.q0), c});
  if (q.q0 < -slack || c > q.q0 * (1.0 + 1e-9) + slack) {
    throw OutsideCone("element lies outside the chroma <= value cone");
  }
  const double v = std::max(q.q0, 0.0);
  double h = 0.0;
  if (c > 0.0) {
    h = std::atan2(q.q2, q.q1);
    if (h < 0.0) h += kTwoPi;
  }
  return {h, std::min(c, v), v};
}

Effect effect_from_illuminant(const HcvPixel& L) {
  if (!(L.v > 1e-9)) {
    throw DegenerateIlluminant("illuminant value must be positive");
  }
  if (L.c >= L.v * (1.0 - 1e-9)) {
    throw DegenerateIlluminant(
        "illuminant chroma too close to its value (light-like boundary)");
  }
  return {L.v, L.c * std::cos(L.h), L.c * std::sin(L.h)};
}

double srgb_decode(double c) {
  if (c <= 0.04045) return c / 12.92;
  return std::pow((c + 0.055) / 1.055, 2.4);
}

double srgb_encode(double c) {
  c = std::clamp(c, 0.0, 1.0);
  if (c <= 0.0031308) return 12.92 * c;
  return std::min(1.0, 1.055 * std::pow(c, 1.0 / 2.4) - 0.055);
}

}  // namespace splitcat
