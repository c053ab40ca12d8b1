// Unit tests for the colour-geometry module: the hexcone RGB/HCV
// conversion, the two quadratic hue remaps and their closed-form
// inverses, the embedding of HCV into the scalar-plane subalgebra, the
// illuminant-to-effect conversion, and the sRGB transfer curves.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "splitcat/colorspace.hpp"
#include "splitcat/rng.hpp"

using namespace splitcat;

namespace {

constexpr double kPi = 3.141592653589793;
constexpr double kTau = 2.0 * kPi;

// Reference inverse by bisection, used to cross-check the closed forms.
double invert_by_bisection(HueRemap remap, double y) {
  double lo = 0.0, hi = kTau;
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (hue_forward(remap, mid) < y) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

TEST_CASE("RGB to HCV anchors") {
  SUBCASE("primaries") {
    const HcvPixel r = rgb_to_hcv({1, 0, 0});
    CHECK(r.h == doctest::Approx(0.0));
    CHECK(r.c == doctest::Approx(1.0));
    CHECK(r.v == doctest::Approx(1.0));

    const HcvPixel g = rgb_to_hcv({0, 1, 0});
    CHECK(g.h == doctest::Approx(kTau / 3.0).epsilon(1e-12));

    const HcvPixel b = rgb_to_hcv({0, 0, 1});
    CHECK(b.h == doctest::Approx(2.0 * kTau / 3.0).epsilon(1e-12));
  }

  SUBCASE("secondaries") {
    CHECK(rgb_to_hcv({1, 1, 0}).h == doctest::Approx(kPi / 3.0));
    CHECK(rgb_to_hcv({0, 1, 1}).h == doctest::Approx(kPi));
    CHECK(rgb_to_hcv({1, 0, 1}).h == doctest::Approx(5.0 * kPi / 3.0));
  }

  SUBCASE("achromatic pixels have zero chroma and zero hue") {
    for (double g : {0.0, 0.25, 0.5, 1.0}) {
      const HcvPixel p = rgb_to_hcv({g, g, g});
      CHECK(p.h == 0.0);
      CHECK(p.c == 0.0);
      CHECK(p.v == doctest::Approx(g));
    }
  }

  SUBCASE("value is the max channel, chroma the spread") {
    const HcvPixel p = rgb_to_hcv({0.8, 0.5, 0.3});
    CHECK(p.v == doctest::Approx(0.8));
    CHECK(p.c == doctest::Approx(0.5));
  }

  SUBCASE("non-finite input is rejected") {
    CHECK_THROWS_AS(rgb_to_hcv({std::nan(""), 0, 0}), DomainError);
  }
}

TEST_CASE("RGB/HCV round trips") {
  Rng rng(301);
  for (int n = 0; n < 2000; ++n) {
    const RgbPixel p{rng.uniform(), rng.uniform(), rng.uniform()};
    const RgbPixel back = hcv_to_rgb(rgb_to_hcv(p));
    CHECK(std::abs(back.r - p.r) < 1e-9);
    CHECK(std::abs(back.g - p.g) < 1e-9);
    CHECK(std::abs(back.b - p.b) < 1e-9);
  }

  // HCV -> RGB -> HCV on valid cone points, including the h = 2*pi seam.
  for (int n = 0; n < 2000; ++n) {
    const double v = rng.uniform(0.05, 1.0);
    const HcvPixel p{rng.uniform(0.0, kTau), rng.uniform(0.0, 1.0) * v, v};
    const HcvPixel back = rgb_to_hcv(hcv_to_rgb(p));
    CHECK(std::abs(back.c - p.c) < 1e-9);
    CHECK(std::abs(back.v - p.v) < 1e-9);
    if (p.c > 1e-6) {
      double dh = std::abs(back.h - p.h);
      dh = std::min(dh, kTau - dh);
      CHECK(dh < 1e-8);
    }
  }

  const RgbPixel seam = hcv_to_rgb({kTau, 0.5, 1.0});
  CHECK(seam.r == doctest::Approx(1.0));
  CHECK(seam.g == doctest::Approx(0.5));
  CHECK(seam.b == doctest::Approx(0.5));
}

TEST_CASE("single-knot hue remap") {
  SUBCASE("anchors") {
    CHECK(std::abs(hue_forward(HueRemap::F1, 0.0)) <= 1e-12);
    CHECK(std::abs(hue_forward(HueRemap::F1, kTau) - kTau) <= 1e-12);
    CHECK(std::abs(hue_forward(HueRemap::F1, 2.0 * kPi / 3.0) - kPi) <=
          1e-12);
    CHECK(std::abs(hue_forward(HueRemap::F1, kPi) - 11.0 * kPi / 8.0) <=
          1e-12);
  }

  SUBCASE("strictly increasing on a fine grid") {
    double prev = hue_forward(HueRemap::F1, 0.0);
    for (int i = 1; i <= 10000; ++i) {
      const double x = kTau * i / 10000.0;
      const double y = hue_forward(HueRemap::F1, x);
      CHECK(y > prev);
      prev = y;
    }
  }

  SUBCASE("closed-form inverse matches bisection") {
    Rng rng(302);
    for (int n = 0; n < 500; ++n) {
      const double y = rng.uniform(0.0, kTau);
      const double x = hue_inverse(HueRemap::F1, y);
      CHECK(std::abs(x - invert_by_bisection(HueRemap::F1, y)) < 1e-9);
    }
  }

  SUBCASE("round trips") {
    Rng rng(303);
    for (int n = 0; n < 1000; ++n) {
      const double x = rng.uniform(0.0, kTau);
      CHECK(std::abs(hue_inverse(HueRemap::F1, hue_forward(HueRemap::F1, x)) -
                     x) < 1e-9);
      CHECK(std::abs(hue_forward(HueRemap::F1, hue_inverse(HueRemap::F1, x)) -
                     x) < 1e-9);
    }
  }
}

TEST_CASE("two-knot hue remap") {
  SUBCASE("anchors") {
    CHECK(std::abs(hue_forward(HueRemap::F2, 0.0)) <= 1e-12);
    CHECK(std::abs(hue_forward(HueRemap::F2, kPi / 3.0) - 2.0 * kPi / 3.0) <=
          1e-12);
    CHECK(std::abs(hue_forward(HueRemap::F2, 2.0 * kPi / 3.0) - kPi) <=
          1e-12);
    CHECK(std::abs(hue_forward(HueRemap::F2, 4.0 * kPi / 3.0) -
                   5.0 * kPi / 3.0) <= 1e-12);
    CHECK(std::abs(hue_forward(HueRemap::F2, kTau) - kTau) <= 1e-12);
  }

  SUBCASE("continuous at the interior knot") {
    const double knot = 2.0 * kPi / 3.0;
    const double below = hue_forward(HueRemap::F2, knot - 1e-12);
    const double above = hue_forward(HueRemap::F2, knot + 1e-12);
    CHECK(std::abs(below - above) < 1e-10);
  }

  SUBCASE("strictly increasing on a fine grid") {
    double prev = hue_forward(HueRemap::F2, 0.0);
    for (int i = 1; i <= 10000; ++i) {
      const double x = kTau * i / 10000.0;
      const double y = hue_forward(HueRemap::F2, x);
      CHECK(y > prev);
      prev = y;
    }
  }

  SUBCASE("closed-form inverse matches bisection and round trips") {
    Rng rng(304);
    for (int n = 0; n < 500; ++n) {
      const double y = rng.uniform(0.0, kTau);
      const double x = hue_inverse(HueRemap::F2, y);
      CHECK(std::abs(x - invert_by_bisection(HueRemap::F2, y)) < 1e-9);
      CHECK(std::abs(hue_forward(HueRemap::F2, x) - y) < 1e-9);
    }
  }
}

TEST_CASE("identity remap") {
  Rng rng(305);
  for (int n = 0; n < 100; ++n) {
    const double x = rng.uniform(0.0, kTau);
    CHECK(hue_forward(HueRemap::Identity, x) == x);
    CHECK(hue_inverse(HueRemap::Identity, x) == x);
  }
}

TEST_CASE("HCV embedding into the scalar plane") {
  SUBCASE("worked examples") {
    const S0Element red = hcv_to_s0({0.0, 1.0, 1.0});
    CHECK(red.q0 == doctest::Approx(1.0));
    CHECK(red.q1 == doctest::Approx(1.0));
    CHECK(std::abs(red.q2) < 1e-12);

    const S0Element gray = hcv_to_s0({0.0, 0.0, 0.5});
    CHECK(gray.q0 == doctest::Approx(0.5));
    CHECK(std::abs(gray.q1) < 1e-15);

    const S0Element up = hcv_to_s0({kPi / 2.0, 0.3, 0.8});
    CHECK(up.q0 == doctest::Approx(0.8));
    CHECK(std::abs(up.q1) < 1e-12);
    CHECK(up.q2 == doctest::Approx(0.3));
  }

  SUBCASE("round trips on cone points") {
    Rng rng(306);
    for (int n = 0; n < 2000; ++n) {
      const double v = rng.uniform(0.05, 1.0);
      const HcvPixel p{rng.uniform(0.0, kTau), rng.uniform(0.0, 0.999) * v,
                       v};
      const HcvPixel back = s0_to_hcv(hcv_to_s0(p));
      CHECK(std::abs(back.v - p.v) < 1e-12);
      CHECK(std::abs(back.c - p.c) < 1e-12);
      if (p.c > 1e-9) {
        double dh = std::abs(back.h - p.h);
        dh = std::min(dh, kTau - dh);
        CHECK(dh < 1e-9);
      }
    }
  }

  SUBCASE("points outside the cone are rejected") {
    CHECK_THROWS_AS(s0_to_hcv(S0Element{0.5, 0.6, 0.0}), OutsideCone);
    CHECK_THROWS_AS(s0_to_hcv(S0Element{-0.1, 0.0, 0.0}), OutsideCone);
    // Boundary within tolerance is accepted and clamped.
    const HcvPixel edge = s0_to_hcv(S0Element{0.5, 0.5 + 1e-13, 0.0});
    CHECK(edge.c <= edge.v);
  }
}

TEST_CASE("illuminant to effect") {
  SUBCASE("chromatic illuminant") {
    const Effect e = effect_from_illuminant({0.0, 0.4, 0.8});
    CHECK(e.e0 == doctest::Approx(0.8));
    CHECK(e.e1 == doctest::Approx(0.4));
    CHECK(std::abs(e.e2) < 1e-12);
  }

  SUBCASE("achromatic illuminant") {
    const Effect e = effect_from_illuminant({1.0, 0.0, 0.7});
    CHECK(e.e0 == doctest::Approx(0.7));
    CHECK(std::abs(e.e1) < 1e-15);
    CHECK(std::abs(e.e2) < 1e-15);
  }

  SUBCASE("degenerate illuminants are rejected") {
    CHECK_THROWS_AS(effect_from_illuminant({0.0, 0.0, 0.0}),
                    DegenerateIlluminant);
    CHECK_THROWS_AS(effect_from_illuminant({0.0, 0.9, 0.9}),
                    DegenerateIlluminant);
    CHECK_THROWS_AS(effect_from_illuminant({0.0, 0.5, 1e-12}),
                    DegenerateIlluminant);
  }
}

TEST_CASE("sRGB transfer curves") {
  CHECK(srgb_decode(0.0) == 0.0);
  CHECK(srgb_decode(1.0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(srgb_encode(0.0) == 0.0);
  CHECK(srgb_encode(1.0) == doctest::Approx(1.0).epsilon(1e-12));

  // Value frozen from an independent evaluation of the transfer curve.
  CHECK(srgb_decode(0.5) ==
        doctest::Approx(0.21404114048223255).epsilon(1e-12));

  // The linear toe and the power segment meet continuously.
  CHECK(std::abs(srgb_decode(0.04045) - srgb_decode(0.040451)) < 1e-6);

  Rng rng(307);
  for (int n = 0; n < 2000; ++n) {
    const double c = rng.uniform();
    CHECK(std::abs(srgb_encode(srgb_decode(c)) - c) < 1e-9);
    CHECK(std::abs(srgb_decode(srgb_encode(c)) - c) < 1e-9);
  }

  // Encode clamps out-of-range input.
  CHECK(srgb_encode(-0.5) == 0.0);
  CHECK(srgb_encode(1.5) == srgb_encode(1.0));
  CHECK(srgb_encode(1.5) == doctest::Approx(1.0).epsilon(1e-12));
}
