#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "openspace/raster.hpp"

namespace openspace::filters {

enum class OutlierDirection { Bright, Dark, Both };

std::string_view to_string(OutlierDirection direction) noexcept;
/// Accepts "bright", "dark", "both" (any case).
OutlierDirection parse_outlier_direction(std::string_view text);

struct OutlierParams {
  double radius = 10.0;
  double threshold = 2.0;
  OutlierDirection direction = OutlierDirection::Bright;

  void validate() const;
};

struct CannyParams {
  double gaussian_sigma = 1.4;
  double low_threshold = 40.0;
  double high_threshold = 90.0;

  void validate() const;
};

struct BandThreshold {
  std::uint8_t lower = 0;
  std::uint8_t upper = 48;

  void validate() const;
};

/// Magnitude of the 3x3 Sobel gradient, sqrt(gx^2 + gy^2), with replicated
/// borders. gx correlates with [[1,0,-1],[2,0,-2],[1,0,-1]] and gy with
/// [[1,2,1],[0,0,0],[-1,-2,-1]]. Requires at least 3x3.
ScalarField sobel_magnitude(const GrayRaster& img);

/// Canny edges: Gaussian smoothing, Sobel gradient, non-maximum suppression
/// and hysteresis (8-connected) between the two thresholds.
BinaryMask canny_edges(const GrayRaster& img, const CannyParams& params = {});

/// Replaces a pixel by the median of the disc of `radius` around it when it
/// deviates from that median by more than `threshold` in the chosen
/// direction. Medians are taken from the unmodified input; even-sized
/// neighbourhoods cannot occur (the disc is symmetric around the centre),
/// and borders replicate.
GrayRaster remove_outliers(const GrayRaster& img, const OutlierParams& params = {});

/// Bit set iff lower <= pixel <= upper.
BinaryMask threshold_band(const GrayRaster& img, const BandThreshold& band = {});

/// Excess-green index 2g - r - b above `exg_threshold`.
BinaryMask vegetation_mask(const ColorRaster& img, int exg_threshold = 40);

/// Population variance of the window x window neighbourhood (replicated
/// borders) above `var_threshold`. `window` must be odd and >= 3.
BinaryMask texture_mask(const GrayRaster& img, int window = 5, double var_threshold = 300.0);

/// Disc offsets (dx, dy) with dx^2 + dy^2 <= radius^2, row by row: for each
/// dy in [-r, r] the half-width of the disc on that row.
struct DiscRows {
  int reach = 0;                 // floor(radius)
  std::vector<int> half_width;   // index dy + reach
};
DiscRows disc_rows(double radius);

}  // namespace openspace::filters
