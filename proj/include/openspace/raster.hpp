#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace openspace {

/// Raised for every recoverable failure in the library: bad arguments,
/// mismatched dimensions, unreadable files.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Rgb {
  std::uint8_t r = 0;
  std::uint8_t g = 0;
  std::uint8_t b = 0;

  friend constexpr auto operator<=>(const Rgb&, const Rgb&) = default;
};

struct GrayTag;
struct MaskTag;
struct FieldTag;
struct ColorTag;

/// Row-major 2-D grid. Coordinates are (x, y) = (column, row), origin at the
/// top-left, 0-based. The tag keeps semantically different grids of the same
/// element type (gray bytes vs. mask bits) from converting into each other.
template <class T, class Tag>
class Grid {
 public:
  using value_type = T;

  Grid() = default;

  Grid(int width, int height, T fill = T{}) : width_(width), height_(height) {
    check_shape(width, height);
    values_.assign(static_cast<std::size_t>(width) * static_cast<std::size_t>(height), fill);
  }

  Grid(int width, int height, std::vector<T> values)
      : width_(width), height_(height), values_(std::move(values)) {
    check_shape(width, height);
    if (values_.size() != static_cast<std::size_t>(width) * static_cast<std::size_t>(height)) {
      throw Error("grid storage does not match " + std::to_string(width) + "x" +
                  std::to_string(height));
    }
  }

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }
  std::size_t size() const noexcept { return values_.size(); }
  bool empty() const noexcept { return values_.empty(); }

  bool contains(int x, int y) const noexcept {
    return x >= 0 && y >= 0 && x < width_ && y < height_;
  }

  T& operator()(int x, int y) noexcept { return values_[index(x, y)]; }
  const T& operator()(int x, int y) const noexcept { return values_[index(x, y)]; }

  /// Replicate-edge access: out-of-range coordinates are clamped to the border.
  const T& clamped(int x, int y) const noexcept {
    x = x < 0 ? 0 : (x >= width_ ? width_ - 1 : x);
    y = y < 0 ? 0 : (y >= height_ ? height_ - 1 : y);
    return values_[index(x, y)];
  }

  std::span<T> row(int y) noexcept {
    return {values_.data() + static_cast<std::size_t>(y) * width_, static_cast<std::size_t>(width_)};
  }
  std::span<const T> row(int y) const noexcept {
    return {values_.data() + static_cast<std::size_t>(y) * width_, static_cast<std::size_t>(width_)};
  }

  std::span<T> values() noexcept { return values_; }
  std::span<const T> values() const noexcept { return values_; }

  template <class U, class OtherTag>
  bool same_shape(const Grid<U, OtherTag>& other) const noexcept {
    return width_ == other.width() && height_ == other.height();
  }

  friend bool operator==(const Grid&, const Grid&) = default;

 private:
  static void check_shape(int width, int height) {
    if (width < 1 || height < 1) {
      throw Error("grid dimensions must be positive, got " + std::to_string(width) + "x" +
                  std::to_string(height));
    }
  }

  std::size_t index(int x, int y) const noexcept {
    return static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) + static_cast<std::size_t>(x);
  }

  int width_ = 0;
  int height_ = 0;
  std::vector<T> values_;
};

using ColorRaster = Grid<Rgb, ColorTag>;
using GrayRaster = Grid<std::uint8_t, GrayTag>;
/// Real-valued, non-negative per-pixel field (gradient magnitudes).
using ScalarField = Grid<double, FieldTag>;
/// One byte per pixel, 0 or 1.
using BinaryMask = Grid<std::uint8_t, MaskTag>;

std::size_t count(const BinaryMask& mask) noexcept;

BinaryMask mask_not(const BinaryMask& mask);
BinaryMask mask_and(const BinaryMask& a, const BinaryMask& b);
BinaryMask mask_or(const BinaryMask& a, const BinaryMask& b);
/// True iff every set bit of `inner` is also set in `outer`.
bool is_subset(const BinaryMask& inner, const BinaryMask& outer);

template <class A, class B>
void require_same_shape(const A& a, const B& b, const char* what) {
  if (!a.same_shape(b)) {
    throw Error(std::string(what) + ": dimension mismatch (" + std::to_string(a.width()) + "x" +
                std::to_string(a.height()) + " vs " + std::to_string(b.width()) + "x" +
                std::to_string(b.height()) + ")");
  }
}

/// round(0.299 r + 0.587 g + 0.114 b), ties rounded up.
GrayRaster to_gray(const ColorRaster& img);
GrayRaster invert(const GrayRaster& img);
/// min(round(v), 255) per value.
GrayRaster clamp_to_gray(const ScalarField& field);
/// Renders set bits as `on` and clear bits as `off`.
GrayRaster mask_to_gray(const BinaryMask& mask, std::uint8_t on = 255, std::uint8_t off = 0);
ColorRaster gray_to_color(const GrayRaster& img);

}  // namespace openspace
