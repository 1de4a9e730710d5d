#include <algorithm>
#include <cmath>

#include "openspace/kernels.hpp"

namespace openspace::kernels::scalar {
namespace {

void luma(std::span<const Rgb> in, std::span<std::uint8_t> out) {
  for (std::size_t i = 0; i < in.size(); ++i) {
    // Exact integer form of the weighted sum; +500 rounds halves up.
    const int sum = 299 * in[i].r + 587 * in[i].g + 114 * in[i].b + 500;
    out[i] = static_cast<std::uint8_t>(sum / 1000);
  }
}

void invert(std::span<const std::uint8_t> in, std::span<std::uint8_t> out) {
  for (std::size_t i = 0; i < in.size(); ++i) out[i] = static_cast<std::uint8_t>(255 - in[i]);
}

void band(std::span<const std::uint8_t> in, std::uint8_t lower, std::uint8_t upper,
          std::span<std::uint8_t> out) {
  for (std::size_t i = 0; i < in.size(); ++i) out[i] = (in[i] >= lower && in[i] <= upper) ? 1 : 0;
}

void excess_green(std::span<const Rgb> in, int threshold, std::span<std::uint8_t> out) {
  for (std::size_t i = 0; i < in.size(); ++i) {
    const int exg = 2 * in[i].g - in[i].r - in[i].b;
    out[i] = exg > threshold ? 1 : 0;
  }
}

void clamp_round(std::span<const double> in, std::span<std::uint8_t> out) {
  for (std::size_t i = 0; i < in.size(); ++i) {
    out[i] = static_cast<std::uint8_t>(std::min(std::round(in[i]), 255.0));
  }
}

void sobel(const std::uint8_t* above, const std::uint8_t* center, const std::uint8_t* below,
           std::span<double> out) {
  for (std::size_t i = 0; i < out.size(); ++i) {
    const int left = above[i] + 2 * center[i] + below[i];
    const int right = above[i + 2] + 2 * center[i + 2] + below[i + 2];
    const int top = above[i] + 2 * above[i + 1] + above[i + 2];
    const int bottom = below[i] + 2 * below[i + 1] + below[i + 2];
    const int gx = left - right;
    const int gy = top - bottom;
    out[i] = std::sqrt(static_cast<double>(gx * gx + gy * gy));
  }
}

}  // namespace

const KernelTable kTable{luma, invert, band, excess_green, clamp_round, sobel};

}  // namespace openspace::kernels::scalar
