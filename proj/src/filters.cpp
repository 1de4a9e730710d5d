#include "openspace/filters.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>
#include <vector>

#include "openspace/kernels.hpp"

namespace openspace::filters {

std::string_view to_string(OutlierDirection direction) noexcept {
  switch (direction) {
    case OutlierDirection::Bright:
      return "bright";
    case OutlierDirection::Dark:
      return "dark";
    case OutlierDirection::Both:
      return "both";
  }
  return "bright";
}

OutlierDirection parse_outlier_direction(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
  if (lower == "bright") return OutlierDirection::Bright;
  if (lower == "dark") return OutlierDirection::Dark;
  if (lower == "both") return OutlierDirection::Both;
  throw Error("unknown outlier direction '" + std::string(text) + "' (bright|dark|both)");
}

void OutlierParams::validate() const {
  if (!(radius >= 1.0) || !std::isfinite(radius)) throw Error("outlier radius must be >= 1");
  if (!(threshold >= 0.0) || !std::isfinite(threshold)) throw Error("outlier threshold must be >= 0");
}

void CannyParams::validate() const {
  if (!(gaussian_sigma > 0.0) || !std::isfinite(gaussian_sigma)) throw Error("canny sigma must be > 0");
  if (!(low_threshold >= 0.0)) throw Error("canny low threshold must be >= 0");
  if (!(low_threshold <= high_threshold)) {
    throw Error("canny low threshold (" + std::to_string(low_threshold) + ") exceeds high threshold (" +
                std::to_string(high_threshold) + ")");
  }
}

void BandThreshold::validate() const {
  if (lower > upper) {
    throw Error("band lower (" + std::to_string(lower) + ") exceeds upper (" + std::to_string(upper) + ")");
  }
}

ScalarField sobel_magnitude(const GrayRaster& img) {
  const int w = img.width();
  const int h = img.height();
  if (w < 3 || h < 3) throw Error("sobel_magnitude needs at least 3x3, got " + std::to_string(w) + "x" + std::to_string(h));

  // Rows padded by one replicated pixel left and right; row index y + 1.
  const std::size_t stride = static_cast<std::size_t>(w) + 2;
  std::vector<std::uint8_t> padded(stride * (static_cast<std::size_t>(h) + 2));
  for (int py = 0; py < h + 2; ++py) {
    const int sy = std::clamp(py - 1, 0, h - 1);
    std::uint8_t* dst = padded.data() + stride * py;
    const auto src = img.row(sy);
    dst[0] = src[0];
    std::copy(src.begin(), src.end(), dst + 1);
    dst[w + 1] = src[w - 1];
  }

  ScalarField out(w, h);
  const auto& k = kernels::active();
  for (int y = 0; y < h; ++y) {
    const std::uint8_t* above = padded.data() + stride * y;
    k.sobel(above, above + stride, above + 2 * stride, out.row(y));
  }
  return out;
}

BinaryMask threshold_band(const GrayRaster& img, const BandThreshold& band) {
  band.validate();
  BinaryMask out(img.width(), img.height());
  kernels::active().band(img.values(), band.lower, band.upper, out.values());
  return out;
}

BinaryMask vegetation_mask(const ColorRaster& img, int exg_threshold) {
  BinaryMask out(img.width(), img.height());
  kernels::active().excess_green(img.values(), exg_threshold, out.values());
  return out;
}

BinaryMask texture_mask(const GrayRaster& img, int window, double var_threshold) {
  if (window < 3 || window % 2 == 0) {
    throw Error("texture window must be odd and >= 3, got " + std::to_string(window));
  }
  const int w = img.width();
  const int h = img.height();
  const int half = window / 2;
  const int pw = w + 2 * half;
  const int ph = h + 2 * half;

  // Summed-area tables of v and v^2 over the replicate-padded image.
  std::vector<std::int64_t> sum(static_cast<std::size_t>(pw + 1) * (ph + 1), 0);
  std::vector<std::int64_t> sq(sum.size(), 0);
  const auto at = [pw](int x, int y) { return static_cast<std::size_t>(y) * (pw + 1) + x; };
  for (int y = 0; y < ph; ++y) {
    std::int64_t row_sum = 0;
    std::int64_t row_sq = 0;
    for (int x = 0; x < pw; ++x) {
      const std::int64_t v = img.clamped(x - half, y - half);
      row_sum += v;
      row_sq += v * v;
      sum[at(x + 1, y + 1)] = sum[at(x + 1, y)] + row_sum;
      sq[at(x + 1, y + 1)] = sq[at(x + 1, y)] + row_sq;
    }
  }

  const std::int64_t n = static_cast<std::int64_t>(window) * window;
  // n^2 * variance = n * sum(v^2) - sum(v)^2, kept in integers.
  const double scaled_threshold = var_threshold * static_cast<double>(n * n);
  BinaryMask out(w, h);
  for (int y = 0; y < h; ++y) {
    auto dst = out.row(y);
    for (int x = 0; x < w; ++x) {
      const auto box = [&](const std::vector<std::int64_t>& t) {
        return t[at(x + window, y + window)] - t[at(x, y + window)] - t[at(x + window, y)] + t[at(x, y)];
      };
      const std::int64_t s = box(sum);
      const std::int64_t s2 = box(sq);
      dst[x] = static_cast<double>(n * s2 - s * s) > scaled_threshold ? 1 : 0;
    }
  }
  return out;
}

DiscRows disc_rows(double radius) {
  DiscRows disc;
  const double r2 = radius * radius;
  while (static_cast<double>((disc.reach + 1) * (disc.reach + 1)) <= r2) ++disc.reach;
  disc.half_width.resize(static_cast<std::size_t>(2 * disc.reach + 1));
  for (int dy = -disc.reach; dy <= disc.reach; ++dy) {
    int hw = 0;
    while (static_cast<double>((hw + 1) * (hw + 1) + dy * dy) <= r2) ++hw;
    disc.half_width[static_cast<std::size_t>(dy + disc.reach)] = hw;
  }
  return disc;
}

}  // namespace openspace::filters
