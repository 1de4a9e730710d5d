#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "openspace/raster.hpp"

namespace openspace::seg {

enum class Connectivity { Four, Eight };

std::string_view to_string(Connectivity conn) noexcept;
/// Accepts 4 or 8.
Connectivity connectivity_from_int(int neighbours);
int to_int(Connectivity conn) noexcept;

struct LabelTag;
using LabelGrid = Grid<std::int32_t, LabelTag>;

/// Region identifiers per pixel: 0 is background, 1..region_count are regions.
class LabelMap {
 public:
  LabelMap() = default;
  /// Throws if any label lies outside 0..region_count.
  LabelMap(LabelGrid labels, int region_count);

  int width() const noexcept { return labels_.width(); }
  int height() const noexcept { return labels_.height(); }
  int region_count() const noexcept { return region_count_; }
  std::int32_t operator()(int x, int y) const noexcept { return labels_(x, y); }
  const LabelGrid& labels() const noexcept { return labels_; }

  template <class U, class OtherTag>
  bool same_shape(const Grid<U, OtherTag>& other) const noexcept {
    return labels_.same_shape(other);
  }

  /// Pixels carrying any non-zero label.
  BinaryMask mask() const;
  BinaryMask region_mask(int label) const;

  friend bool operator==(const LabelMap&, const LabelMap&) = default;

 private:
  LabelGrid labels_;
  int region_count_ = 0;
};

struct BoundingBox {
  int min_x = 0;
  int min_y = 0;
  int max_x = 0;
  int max_y = 0;

  friend bool operator==(const BoundingBox&, const BoundingBox&) = default;
};

struct RegionStats {
  int label = 0;
  std::int64_t area = 0;
  double centroid_x = 0.0;  // mean column
  double centroid_y = 0.0;  // mean row
  BoundingBox bbox;
  double width_estimate = 0.0;
  std::int64_t central_pixel_count = 0;
};

enum class RatioDirection { AtLeast, AtMost };

std::string_view to_string(RatioDirection direction) noexcept;
/// Accepts "atleast" / "atmost" (any case).
RatioDirection parse_ratio_direction(std::string_view text);

/// Region admission rules. The defaults admit every region.
struct RegionFilterConfig {
  std::int64_t min_area = 1;
  double min_width = 0.0;  // 0 disables the width rule
  double ratio_threshold = 0.0;
  RatioDirection ratio_direction = RatioDirection::AtLeast;
  double max_vegetation_fraction = 1.0;
  double max_texture_fraction = 1.0;

  void validate() const;
};

/// Maximal connected sets of set bits, labelled 1..N in order of first
/// encounter in a row-major scan.
LabelMap label_components(const BinaryMask& mask, Connectivity conn = Connectivity::Eight);

/// One record per region in ascending label order, including the width
/// estimate and central pixel count.
std::vector<RegionStats> region_stats(const LabelMap& labels);

/// Thinned skeleton of one region; stays 8-connected.
BinaryMask central_pixels(const LabelMap& labels, int label);

/// Twice the largest chessboard distance from a region pixel to the
/// region's complement (pixels outside the frame count as complement).
double region_width(const LabelMap& labels, int label);

/// central_pixel_count / sqrt(area).
double shape_ratio(const RegionStats& stats);

/// Keeps the regions passing every rule of `cfg` and relabels the survivors
/// 1..M in their original order. `stats` must come from region_stats(labels).
LabelMap filter_regions(const LabelMap& labels, const std::vector<RegionStats>& stats,
                        const RegionFilterConfig& cfg, const BinaryMask& vegetation,
                        const BinaryMask& texture);

/// Per-region verdict of filter_regions, indexed by label - 1.
std::vector<bool> region_verdicts(const LabelMap& labels, const std::vector<RegionStats>& stats,
                                  const RegionFilterConfig& cfg, const BinaryMask& vegetation,
                                  const BinaryMask& texture);

/// Keeps the labels flagged in `keep` (indexed by label - 1) and renumbers
/// them densely, preserving order.
LabelMap keep_regions(const LabelMap& labels, const std::vector<bool>& keep);

namespace detail {

/// 8-neighbourhood bit order used by the thinning tables: bit 0 is east,
/// then counter-clockwise (NE, N, NW, W, SW, S, SE).
std::uint8_t neighbourhood(const std::vector<std::uint8_t>& bits, int stride, std::size_t index);

/// Deleting the centre pixel keeps the topology of an 8-connected
/// foreground with a 4-connected background.
bool is_simple(std::uint8_t neighbourhood) noexcept;

/// Chessboard distance transform of a zero-bordered binary patch.
std::vector<int> chessboard_distance(const std::vector<std::uint8_t>& patch, int width, int height);

/// Connects every hole of a zero-bordered, 8-connected patch to the outside
/// by clearing its shortest 4-connected run of pixels, skipping runs that
/// would split the patch.
std::vector<std::uint8_t> open_holes(const std::vector<std::uint8_t>& patch, int width, int height);

/// Skeleton of a zero-bordered binary patch (holes opened first), returned
/// as a patch.
std::vector<std::uint8_t> thin_patch(const std::vector<std::uint8_t>& patch, int width, int height);

}  // namespace detail

}  // namespace openspace::seg
