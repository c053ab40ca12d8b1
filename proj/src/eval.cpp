#include "splitcat/eval.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

namespace splitcat {

namespace {

constexpr double kPi = std::numbers::pi;

// Strip comments, report whether anything but whitespace remains.
bool meaningful_line(std::string& line) {
  const auto hash = line.find('#');
  if (hash != std::string::npos) line.erase(hash);
  return line.find_first_not_of(" \t\r\n") != std::string::npos;
}

bool rects_overlap(const Rect& a, const Rect& b) {
  return a.x0 < b.x1 && b.x0 < a.x1 && a.y0 < b.y1 && b.y0 < a.y1;
}

double trimmed_mean(std::vector<double>& values) {
  std::sort(values.begin(), values.end());
  const size_t n = values.size();
  const size_t k = n / 10;  // drop 10% at each end, rounded down
  double sum = 0.0;
  for (size_t i = k; i < n - k; ++i) sum += values[i];
  return sum / static_cast<double>(n - 2 * k);
}

double cie94(const LabColor& x, const LabColor& y) {
  const double dL = x.L - y.L;
  const double c1 = std::hypot(x.a, x.b);
  const double c2 = std::hypot(y.a, y.b);
  const double dC = c1 - c2;
  const double da = x.a - y.a;
  const double db = x.b - y.b;
  const double dH2 = std::max(da * da + db * db - dC * dC, 0.0);
  const double sC = 1.0 + 0.045 * c1;
  const double sH = 1.0 + 0.015 * c1;
  return std::sqrt(dL * dL + (dC / sC) * (dC / sC) + dH2 / (sH * sH));
}

double ciede2000(const LabColor& x, const LabColor& y) {
  const double deg = kPi / 180.0;
  const double c1 = std::hypot(x.a, x.b);
  const double c2 = std::hypot(y.a, y.b);
  const double cbar = (c1 + c2) / 2.0;
  const double cbar7 = std::pow(cbar, 7.0);
  const double g = 0.5 * (1.0 - std::sqrt(cbar7 / (cbar7 + std::pow(25.0, 7.0))));
  const double ap1 = (1.0 + g) * x.a;
  const double ap2 = (1.0 + g) * y.a;
  const double cp1 = std::hypot(ap1, x.b);
  const double cp2 = std::hypot(ap2, y.b);
  auto hue_deg = [deg](double ap, double b) -> double {
    if (ap == 0.0 && b == 0.0) return 0.0;
    double h = std::atan2(b, ap) / deg;
    if (h < 0.0) h += 360.0;
    return h;
  };
  const double hp1 = hue_deg(ap1, x.b);
  const double hp2 = hue_deg(ap2, y.b);

  const double dLp = y.L - x.L;
  const double dCp = cp2 - cp1;
  double dhp = 0.0;
  if (cp1 * cp2 != 0.0) {
    dhp = hp2 - hp1;
    if (dhp > 180.0) dhp -= 360.0;
    if (dhp < -180.0) dhp += 360.0;
  }
  const double dHp =
      2.0 * std::sqrt(cp1 * cp2) * std::sin(dhp * deg / 2.0);

  const double lbar = (x.L + y.L) / 2.0;
  const double cbarp = (cp1 + cp2) / 2.0;
  double hbar = hp1 + hp2;
  if (cp1 * cp2 != 0.0) {
    if (std::abs(hp1 - hp2) <= 180.0) {
      hbar = (hp1 + hp2) / 2.0;
    } else if (hp1 + hp2 < 360.0) {
      hbar = (hp1 + hp2 + 360.0) / 2.0;
    } else {
      hbar = (hp1 + hp2 - 360.0) / 2.0;
    }
  }
  const double t = 1.0 - 0.17 * std::cos((hbar - 30.0) * deg) +
                   0.24 * std::cos(2.0 * hbar * deg) +
                   0.32 * std::cos((3.0 * hbar + 6.0) * deg) -
                   0.20 * std::cos((4.0 * hbar - 63.0) * deg);
  const double dtheta = 30.0 * std::exp(-((hbar - 275.0) / 25.0) *
                                        ((hbar - 275.0) / 25.0));
  const double cbarp7 = std::pow(cbarp, 7.0);
  const double rc =
      2.0 * std::sqrt(cbarp7 / (cbarp7 + std::pow(25.0, 7.0)));
  const double lm = (lbar - 50.0) * (lbar - 50.0);
  const double sl = 1.0 + 0.015 * lm / std::sqrt(20.0 + lm);
  const double sc = 1.0 + 0.045 * cbarp;
  const double sh = 1.0 + 0.015 * cbarp * t;
  const double rt = -std::sin(2.0 * dtheta * deg) * rc;

  const double tl = dLp / sl;
  const double tc = dCp / sc;
  const double th = dHp / sh;
  return std::sqrt(tl * tl + tc * tc + th * th + rt * tc * th);
}

}  // namespace

const char* metric_name(MetricKind kind) {
  switch (kind) {
    case MetricKind::Cie94:
      return "cie94";
    case MetricKind::Ciede2000:
      return "ciede2000";
  }
  return "?";
}

MetricKind metric_from_name(const std::string& name) {
  if (name == "cie94") return MetricKind::Cie94;
  if (name == "ciede2000") return MetricKind::Ciede2000;
  throw DomainError("unknown metric: " + name);
}

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t hash = 14695981039346656037ull;
  for (const char ch : bytes) {
    hash ^= static_cast<unsigned char>(ch);
    hash *= 1099511628211ull;
  }
  return hash;
}

CheckerLayout load_layout(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open layout file: " + path);
  }
  CheckerLayout layout;
  std::array<bool, 24> seen{};
  std::string line;
  while (std::getline(in, line)) {
    if (!meaningful_line(line)) continue;
    std::istringstream row(line);
    int index = 0;
    Rect r;
    if (!(row >> index >> r.x0 >> r.y0 >> r.x1 >> r.y1)) {
      throw IoError("malformed layout line: " + line);
    }
    if (index < 1 || index > 24) {
      throw DomainError("layout index out of range 1..24");
    }
    if (seen[index - 1]) {
      throw DomainError("duplicate layout index");
    }
    if (r.x1 <= r.x0 || r.y1 <= r.y0) {
      throw DomainError("layout region is empty");
    }
    seen[index - 1] = true;
    layout.regions[index - 1] = r;
  }
  for (int i = 0; i < 24; ++i) {
    if (!seen[i]) {
      throw DomainError("layout file must define all 24 regions");
    }
  }
  for (int i = 0; i < 24; ++i) {
    for (int j = i + 1; j < 24; ++j) {
      if (rects_overlap(layout.regions[i], layout.regions[j])) {
        throw DomainError("layout regions overlap");
      }
    }
  }
  return layout;
}

BenchmarkChecker load_benchmark(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open benchmark file: " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  const std::string bytes = buffer.str();

  BenchmarkChecker ref;
  ref.checksum = fnv1a64(bytes);
  std::array<bool, 24> seen{};
  std::istringstream all(bytes);
  std::string line;
  while (std::getline(all, line)) {
    if (!meaningful_line(line)) continue;
    std::istringstream row(line);
    int index = 0;
    double r = 0.0, g = 0.0, b = 0.0;
    if (!(row >> index >> r >> g >> b)) {
      throw IoError("malformed benchmark line: " + line);
    }
    if (index < 1 || index > 24) {
      throw DomainError("benchmark index out of range 1..24");
    }
    if (seen[index - 1]) {
      throw DomainError("duplicate benchmark index");
    }
    if (!(r >= 0.0 && r <= 1.0 && g >= 0.0 && g <= 1.0 && b >= 0.0 &&
          b <= 1.0)) {
      throw DomainError("benchmark channels must lie in [0, 1]");
    }
    seen[index - 1] = true;
    ref.patches[index - 1] = {r, g, b};
  }
  for (int i = 0; i < 24; ++i) {
    if (!seen[i]) {
      throw DomainError("benchmark file must define all 24 patches");
    }
  }
  return ref;
}

std::array<RgbPixel, 24> extract_patches(const Image& img,
                                         const CheckerLayout& layout) {
  std::array<RgbPixel, 24> out{};
  for (int i = 0; i < 24; ++i) {
    const Rect& r = layout.regions[i];
    if (r.x0 < 0 || r.y0 < 0 || r.x1 > img.width || r.y1 > img.height) {
      throw RegionOutOfBounds("chart region lies outside the image");
    }
    const size_t n = static_cast<size_t>(r.x1 - r.x0) *
                     static_cast<size_t>(r.y1 - r.y0);
    std::vector<double> red, green, blue;
    red.reserve(n);
    green.reserve(n);
    blue.reserve(n);
    for (int y = r.y0; y < r.y1; ++y) {
      for (int x = r.x0; x < r.x1; ++x) {
        const RgbPixel& px = img.at(x, y);
        red.push_back(px.r);
        green.push_back(px.g);
        blue.push_back(px.b);
      }
    }
    out[i] = {trimmed_mean(red), trimmed_mean(green), trimmed_mean(blue)};
  }
  return out;
}

LabColor rgb_to_lab(const RgbPixel& p) {
  // sRGB primaries, D65 white.
  const double X = 0.4124564 * p.r + 0.3575761 * p.g + 0.1804375 * p.b;
  const double Y = 0.2126729 * p.r + 0.7151522 * p.g + 0.0721750 * p.b;
  const double Z = 0.0193339 * p.r + 0.1191920 * p.g + 0.9503041 * p.b;
  constexpr double xw = 0.95047, yw = 1.0, zw = 1.08883;
  auto f = [](double t) -> double {
    constexpr double d = 6.0 / 29.0;
    if (t > d * d * d) return std::cbrt(t);
    return t / (3.0 * d * d) + 4.0 / 29.0;
  };
  const double fx = f(X / xw);
  const double fy = f(Y / yw);
  const double fz = f(Z / zw);
  return {116.0 * fy - 16.0, 500.0 * (fx - fy), 200.0 * (fy - fz)};
}

double delta_e(MetricKind kind, const LabColor& x, const LabColor& y) {
  switch (kind) {
    case MetricKind::Cie94:
      return cie94(x, y);
    case MetricKind::Ciede2000:
      return ciede2000(x, y);
  }
  throw DomainError("unknown metric");
}

double checker_distance(const std::array<RgbPixel, 24>& patches,
                        const BenchmarkChecker& ref, MetricKind kind) {
  double sum = 0.0;
  for (int i = 0; i < 24; ++i) {
    sum += delta_e(kind, rgb_to_lab(ref.patches[i]), rgb_to_lab(patches[i]));
  }
  return sum / 24.0;
}

double dataset_average(const std::vector<double>& scores) {
  if (scores.empty()) {
    throw EmptyDataset("dataset average of zero scores");
  }
  double sum = 0.0;
  for (const double s : scores) sum += s;
  return sum / static_cast<double>(scores.size());
}

HcvPixel estimate_illuminant_white_patch(const Image& img,
                                         const CheckerLayout& layout) {
  const auto patches = extract_patches(img, layout);
  return rgb_to_hcv(patches[layout.white_patch]);
}

}  // namespace splitcat
