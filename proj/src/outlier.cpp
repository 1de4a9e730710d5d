#include <array>
#include <cmath>

#include "openspace/filters.hpp"

namespace openspace::filters {

GrayRaster remove_outliers(const GrayRaster& img, const OutlierParams& params) {
  params.validate();
  const int w = img.width();
  const int h = img.height();
  const DiscRows disc = disc_rows(params.radius);
  const int reach = disc.reach;

  std::size_t samples = 0;
  for (int hw : disc.half_width) samples += static_cast<std::size_t>(2 * hw + 1);
  // Lower median: 0-based rank (n - 1) / 2 of the sorted neighbourhood.
  const std::size_t rank = (samples - 1) / 2;

  GrayRaster out = img;
  std::array<std::uint32_t, 256> hist{};
  for (int y = 0; y < h; ++y) {
    hist.fill(0);
    for (int dy = -reach; dy <= reach; ++dy) {
      const int hw = disc.half_width[static_cast<std::size_t>(dy + reach)];
      for (int dx = -hw; dx <= hw; ++dx) ++hist[img.clamped(dx, y + dy)];
    }
    for (int x = 0; x < w; ++x) {
      if (x > 0) {
        // Slide the disc one column right: drop each row's leftmost sample, add the new rightmost.
        for (int dy = -reach; dy <= reach; ++dy) {
          const int hw = disc.half_width[static_cast<std::size_t>(dy + reach)];
          --hist[img.clamped(x - 1 - hw, y + dy)];
          ++hist[img.clamped(x + hw, y + dy)];
        }
      }
      std::size_t seen = 0;
      int median = 0;
      for (; median < 255; ++median) {
        seen += hist[static_cast<std::size_t>(median)];
        if (seen > rank) break;
      }

      const double v = img(x, y);
      const double deviation = v - median;
      bool replace = false;
      switch (params.direction) {
        case OutlierDirection::Bright:
          replace = deviation > params.threshold;
          break;
        case OutlierDirection::Dark:
          replace = -deviation > params.threshold;
          break;
        case OutlierDirection::Both:
          replace = std::abs(deviation) > params.threshold;
          break;
      }
      if (replace) out(x, y) = static_cast<std::uint8_t>(median);
    }
  }
  return out;
}

}  // namespace openspace::filters
