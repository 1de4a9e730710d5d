#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "openspace/date.hpp"
#include "openspace/raster.hpp"

namespace openspace::change {

struct DatedMask {
  ImageMeta meta;
  BinaryMask mask;
};

/// Per-pixel comparison of two co-registered masks. The three masks are
/// pairwise disjoint; pixels open on neither date are in none of them.
struct ChangeMap {
  BinaryMask gained;     // open later, not earlier
  BinaryMask lost;       // open earlier, not later
  BinaryMask unchanged;  // open on both dates
  Date earlier;
  Date later;
};

struct ChangeSummary {
  Date earlier;
  Date later;
  std::int64_t earlier_area = 0;
  std::int64_t later_area = 0;
  std::int64_t gained_area = 0;
  std::int64_t lost_area = 0;
  std::int64_t unchanged_area = 0;
  std::int64_t net_change = 0;
  /// 100 * net / earlier_area; empty when the earlier date had no open space.
  std::optional<double> percent_change;
};

/// Requires equal dimensions and earlier date < later date. With
/// min_blob > 0, 8-connected gained or lost blobs smaller than min_blob
/// pixels are dropped from their class (co-registration speckle).
ChangeMap diff_masks(const DatedMask& earlier, const DatedMask& later, std::int64_t min_blob = 0);

/// Set algebra only, no date or speckle handling.
ChangeMap diff_bits(const BinaryMask& earlier, const BinaryMask& later);

ChangeSummary summarize(const ChangeMap& cm);

/// Sorts by date and compares every consecutive pair, then the first and
/// last dates when there are three or more.
std::vector<ChangeMap> change_series(std::vector<DatedMask> masks, std::int64_t min_blob = 0);

}  // namespace openspace::change
