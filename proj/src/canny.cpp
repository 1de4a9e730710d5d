#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "openspace/filters.hpp"

namespace openspace::filters {
namespace {

std::vector<double> gaussian_kernel(double sigma) {
  const int radius = std::max(1, static_cast<int>(std::ceil(3.0 * sigma)));
  std::vector<double> k(static_cast<std::size_t>(2 * radius + 1));
  double total = 0.0;
  for (int i = -radius; i <= radius; ++i) {
    const double v = std::exp(-(i * i) / (2.0 * sigma * sigma));
    k[static_cast<std::size_t>(i + radius)] = v;
    total += v;
  }
  for (double& v : k) v /= total;
  return k;
}

// Separable Gaussian blur with replicated borders.
ScalarField smooth(const GrayRaster& img, double sigma) {
  const int w = img.width();
  const int h = img.height();
  const auto k = gaussian_kernel(sigma);
  const int radius = static_cast<int>(k.size() / 2);

  ScalarField horizontal(w, h);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      double acc = 0.0;
      for (int i = -radius; i <= radius; ++i) acc += k[static_cast<std::size_t>(i + radius)] * img.clamped(x + i, y);
      horizontal(x, y) = acc;
    }
  }
  ScalarField out(w, h);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      double acc = 0.0;
      for (int i = -radius; i <= radius; ++i) acc += k[static_cast<std::size_t>(i + radius)] * horizontal.clamped(x, y + i);
      out(x, y) = acc;
    }
  }
  return out;
}

}  // namespace

BinaryMask canny_edges(const GrayRaster& img, const CannyParams& params) {
  params.validate();
  const int w = img.width();
  const int h = img.height();
  if (w < 3 || h < 3) throw Error("canny_edges needs at least 3x3");

  const ScalarField blurred = smooth(img, params.gaussian_sigma);

  ScalarField magnitude(w, h);
  // Quantised gradient direction: 0 horizontal, 1 rising diagonal, 2 vertical, 3 falling diagonal.
  std::vector<std::uint8_t> direction(static_cast<std::size_t>(w) * h);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const auto p = [&](int dx, int dy) { return blurred.clamped(x + dx, y + dy); };
      const double gx = (p(-1, -1) + 2 * p(-1, 0) + p(-1, 1)) - (p(1, -1) + 2 * p(1, 0) + p(1, 1));
      const double gy = (p(-1, -1) + 2 * p(0, -1) + p(1, -1)) - (p(-1, 1) + 2 * p(0, 1) + p(1, 1));
      magnitude(x, y) = std::hypot(gx, gy);
      double angle = std::atan2(gy, gx) * 180.0 / std::numbers::pi;
      if (angle < 0) angle += 180.0;
      std::uint8_t d = 0;
      if (angle >= 22.5 && angle < 67.5) {
        d = 1;
      } else if (angle >= 67.5 && angle < 112.5) {
        d = 2;
      } else if (angle >= 112.5 && angle < 157.5) {
        d = 3;
      }
      direction[static_cast<std::size_t>(y) * w + x] = d;
    }
  }

  // Non-maximum suppression. Ties along the gradient keep the first pixel
  // (strict against the preceding neighbour, non-strict against the next),
  // so a symmetric ridge yields a one-pixel line.
  static constexpr int kStep[4][2] = {{1, 0}, {1, -1}, {0, 1}, {1, 1}};
  ScalarField thin(w, h, 0.0);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const double m = magnitude(x, y);
      if (m <= 0.0) continue;
      const auto* s = kStep[direction[static_cast<std::size_t>(y) * w + x]];
      const double before = magnitude.clamped(x - s[0], y - s[1]);
      const double after = magnitude.clamped(x + s[0], y + s[1]);
      const bool before_is_self = !magnitude.contains(x - s[0], y - s[1]);
      if ((m > before || before_is_self) && m >= after) thin(x, y) = m;
    }
  }

  // Hysteresis: grow from strong pixels through 8-connected weak pixels.
  BinaryMask edges(w, h, 0);
  std::vector<std::pair<int, int>> stack;
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      if (thin(x, y) >= params.high_threshold && !edges(x, y)) {
        edges(x, y) = 1;
        stack.emplace_back(x, y);
        while (!stack.empty()) {
          const auto [cx, cy] = stack.back();
          stack.pop_back();
          for (int dy = -1; dy <= 1; ++dy) {
            for (int dx = -1; dx <= 1; ++dx) {
              const int nx = cx + dx;
              const int ny = cy + dy;
              if (!edges.contains(nx, ny) || edges(nx, ny)) continue;
              const double v = thin(nx, ny);
              if (v > 0.0 && v >= params.low_threshold) {
                edges(nx, ny) = 1;
                stack.emplace_back(nx, ny);
              }
            }
          }
        }
      }
    }
  }
  return edges;
}

}  // namespace openspace::filters
