#include "openspace/change.hpp"

#include <algorithm>

#include "openspace/segmentation.hpp"

namespace openspace::change {

namespace {

// Clears every 8-connected blob of `mask` smaller than `min_blob` pixels.
void drop_small_blobs(BinaryMask& mask, std::int64_t min_blob) {
  const seg::LabelMap labels = seg::label_components(mask, seg::Connectivity::Eight);
  std::vector<std::int64_t> area(static_cast<std::size_t>(labels.region_count()) + 1, 0);
  for (std::int32_t l : labels.labels().values()) ++area[static_cast<std::size_t>(l)];
  auto bits = mask.values();
  const auto l = labels.labels().values();
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (l[i] != 0 && area[static_cast<std::size_t>(l[i])] < min_blob) bits[i] = 0;
  }
}

}  // namespace

ChangeMap diff_bits(const BinaryMask& earlier, const BinaryMask& later) {
  require_same_shape(earlier, later, "diff_masks");
  ChangeMap cm;
  cm.gained = BinaryMask(earlier.width(), earlier.height());
  cm.lost = BinaryMask(earlier.width(), earlier.height());
  cm.unchanged = BinaryMask(earlier.width(), earlier.height());
  const auto e = earlier.values();
  const auto l = later.values();
  auto g = cm.gained.values();
  auto lo = cm.lost.values();
  auto u = cm.unchanged.values();
  for (std::size_t i = 0; i < e.size(); ++i) {
    const bool a = e[i] != 0;
    const bool b = l[i] != 0;
    g[i] = (!a && b) ? 1 : 0;
    lo[i] = (a && !b) ? 1 : 0;
    u[i] = (a && b) ? 1 : 0;
  }
  return cm;
}

ChangeMap diff_masks(const DatedMask& earlier, const DatedMask& later, std::int64_t min_blob) {
  if (!(earlier.meta.acquisition_date < later.meta.acquisition_date)) {
    throw Error("diff_masks: earlier date " + earlier.meta.acquisition_date.iso() + " is not before later date " +
                later.meta.acquisition_date.iso());
  }
  ChangeMap cm = diff_bits(earlier.mask, later.mask);
  cm.earlier = earlier.meta.acquisition_date;
  cm.later = later.meta.acquisition_date;
  if (min_blob > 0) {
    drop_small_blobs(cm.gained, min_blob);
    drop_small_blobs(cm.lost, min_blob);
  }
  return cm;
}

ChangeSummary summarize(const ChangeMap& cm) {
  ChangeSummary s;
  s.earlier = cm.earlier;
  s.later = cm.later;
  s.gained_area = static_cast<std::int64_t>(count(cm.gained));
  s.lost_area = static_cast<std::int64_t>(count(cm.lost));
  s.unchanged_area = static_cast<std::int64_t>(count(cm.unchanged));
  s.earlier_area = s.lost_area + s.unchanged_area;
  s.later_area = s.gained_area + s.unchanged_area;
  s.net_change = s.later_area - s.earlier_area;
  if (s.earlier_area > 0) {
    s.percent_change = 100.0 * static_cast<double>(s.net_change) / static_cast<double>(s.earlier_area);
  }
  return s;
}

std::vector<ChangeMap> change_series(std::vector<DatedMask> masks, std::int64_t min_blob) {
  if (masks.empty()) throw Error("change_series needs at least one mask");
  std::stable_sort(masks.begin(), masks.end(), [](const DatedMask& a, const DatedMask& b) {
    return a.meta.acquisition_date < b.meta.acquisition_date;
  });
  for (std::size_t i = 1; i < masks.size(); ++i) {
    require_same_shape(masks[0].mask, masks[i].mask, "change_series");
    if (masks[i].meta.acquisition_date == masks[i - 1].meta.acquisition_date) {
      throw Error("change_series: duplicate date " + masks[i].meta.acquisition_date.iso());
    }
  }
  std::vector<ChangeMap> out;
  for (std::size_t i = 1; i < masks.size(); ++i) out.push_back(diff_masks(masks[i - 1], masks[i], min_blob));
  if (masks.size() >= 3) out.push_back(diff_masks(masks.front(), masks.back(), min_blob));
  return out;
}

}  // namespace openspace::change
