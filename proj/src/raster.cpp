#include "openspace/raster.hpp"

#include <algorithm>

#include "openspace/kernels.hpp"

namespace openspace {

std::size_t count(const BinaryMask& mask) noexcept {
  return static_cast<std::size_t>(std::count(mask.values().begin(), mask.values().end(), 1));
}

BinaryMask mask_not(const BinaryMask& mask) {
  BinaryMask out(mask.width(), mask.height());
  std::transform(mask.values().begin(), mask.values().end(), out.values().begin(),
                 [](std::uint8_t v) -> std::uint8_t { return v ? 0 : 1; });
  return out;
}

BinaryMask mask_and(const BinaryMask& a, const BinaryMask& b) {
  require_same_shape(a, b, "mask_and");
  BinaryMask out(a.width(), a.height());
  std::transform(a.values().begin(), a.values().end(), b.values().begin(), out.values().begin(),
                 [](std::uint8_t x, std::uint8_t y) -> std::uint8_t { return (x && y) ? 1 : 0; });
  return out;
}

BinaryMask mask_or(const BinaryMask& a, const BinaryMask& b) {
  require_same_shape(a, b, "mask_or");
  BinaryMask out(a.width(), a.height());
  std::transform(a.values().begin(), a.values().end(), b.values().begin(), out.values().begin(),
                 [](std::uint8_t x, std::uint8_t y) -> std::uint8_t { return (x || y) ? 1 : 0; });
  return out;
}

bool is_subset(const BinaryMask& inner, const BinaryMask& outer) {
  require_same_shape(inner, outer, "is_subset");
  const auto in = inner.values();
  const auto out = outer.values();
  for (std::size_t i = 0; i < in.size(); ++i) {
    if (in[i] && !out[i]) return false;
  }
  return true;
}

GrayRaster to_gray(const ColorRaster& img) {
  GrayRaster out(img.width(), img.height());
  kernels::active().luma(img.values(), out.values());
  return out;
}

GrayRaster invert(const GrayRaster& img) {
  GrayRaster out(img.width(), img.height());
  kernels::active().invert(img.values(), out.values());
  return out;
}

GrayRaster clamp_to_gray(const ScalarField& field) {
  GrayRaster out(field.width(), field.height());
  kernels::active().clamp_round(field.values(), out.values());
  return out;
}

GrayRaster mask_to_gray(const BinaryMask& mask, std::uint8_t on, std::uint8_t off) {
  GrayRaster out(mask.width(), mask.height());
  std::transform(mask.values().begin(), mask.values().end(), out.values().begin(),
                 [=](std::uint8_t v) { return v ? on : off; });
  return out;
}

ColorRaster gray_to_color(const GrayRaster& img) {
  ColorRaster out(img.width(), img.height());
  std::transform(img.values().begin(), img.values().end(), out.values().begin(),
                 [](std::uint8_t v) { return Rgb{v, v, v}; });
  return out;
}

}  // namespace openspace
