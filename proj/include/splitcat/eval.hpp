// eval.hpp
//
// Evaluation harness for chart images: extract the 24 patches of a
// standard 4x6 test chart from known pixel regions, convert to CIELAB
// (sRGB primaries, D65 white), score against a reference chart with the
// CIE94 and CIEDE2000 difference formulas, and average over a dataset.
// The 19th patch (1-based, chart order) is white; its average color
// doubles as the ground-truth illuminant estimate for a chart photographed
// under a cast.

#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "splitcat/cat.hpp"
#include "splitcat/colorspace.hpp"
#include "splitcat/errors.hpp"

namespace splitcat {

// Half-open pixel rectangle [x0, x1) x [y0, y1).
struct Rect {
  int x0 = 0, y0 = 0, x1 = 0, y1 = 0;
};

// The 24 chart regions in chart order (4 rows by 6 columns, row-major)
// and the index of the white patch.
struct CheckerLayout {
  std::array<Rect, 24> regions{};
  // 0-based index of the white patch; the chart convention numbers it 19.
  int white_patch = 18;
};

// CIELAB coordinates under D65.
struct LabColor {
  double L = 0.0, a = 0.0, b = 0.0;
};

// Reference chart: 24 linear-RGB patch colors plus a checksum of the file
// they came from, so evaluation reports pin down which reference was used.
struct BenchmarkChecker {
  std::array<RgbPixel, 24> patches{};
  std::uint64_t checksum = 0;
};

// Implemented color difference formulas.
enum class MetricKind { Cie94, Ciede2000 };

const char* metric_name(MetricKind kind);
MetricKind metric_from_name(const std::string& name);

// Parse a layout file: one `index x0 y0 x1 y1` line per region, indices
// 1..24 each exactly once, `#` starts a comment.  Regions must be
// non-empty and pairwise disjoint.  Throws IoError / DomainError.
CheckerLayout load_layout(const std::string& path);

// Parse a reference chart file: `index r g b` with linear channel values
// in [0, 1], indices 1..24, `#` comments.  Records the FNV-1a checksum of
// the raw file bytes.  Throws IoError / DomainError.
BenchmarkChecker load_benchmark(const std::string& path);

// FNV-1a 64-bit hash of a byte string (the checksum used above).
std::uint64_t fnv1a64(const std::string& bytes);

// Per-region trimmed mean: each channel independently drops its lowest
// and highest 10% of samples (rounded down) and averages the rest.
// Throws RegionOutOfBounds when a region does not fit in the image.
std::array<RgbPixel, 24> extract_patches(const Image& img,
                                         const CheckerLayout& layout);

// Linear RGB (sRGB primaries) -> XYZ (D65) -> CIELAB.
LabColor rgb_to_lab(const RgbPixel& p);

// Color difference between two Lab samples.  CIE94 uses the graphic-arts
// weights (kL = 1, K1 = 0.045, K2 = 0.015) and is asymmetric by
// definition (the first argument is the reference); CIEDE2000 follows the
// published formula and is symmetric.
double delta_e(MetricKind kind, const LabColor& x, const LabColor& y);

// Mean delta_e of the 24 patches against the reference chart.
double checker_distance(const std::array<RgbPixel, 24>& patches,
                        const BenchmarkChecker& ref, MetricKind kind);

// Arithmetic mean of per-image scores.  Throws EmptyDataset.
double dataset_average(const std::vector<double>& scores);

// Ground-truth illuminant for a chart image: the white patch's trimmed
// mean, read in HCV.
HcvPixel estimate_illuminant_white_patch(const Image& img,
                                         const CheckerLayout& layout);

}  // namespace splitcat
