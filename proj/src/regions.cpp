#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <deque>
#include <string>
#include <vector>

#include "openspace/segmentation.hpp"

namespace openspace::seg {

std::string_view to_string(RatioDirection direction) noexcept {
  return direction == RatioDirection::AtLeast ? "atleast" : "atmost";
}

RatioDirection parse_ratio_direction(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
  if (lower == "atleast") return RatioDirection::AtLeast;
  if (lower == "atmost") return RatioDirection::AtMost;
  throw Error("unknown ratio direction '" + std::string(text) + "' (atleast|atmost)");
}

void RegionFilterConfig::validate() const {
  if (min_area < 1) throw Error("min_area must be >= 1");
  if (!(min_width >= 0.0)) throw Error("min_width must be >= 0");
  if (!(ratio_threshold >= 0.0)) throw Error("ratio_threshold must be >= 0");
  if (!(max_vegetation_fraction >= 0.0 && max_vegetation_fraction <= 1.0)) {
    throw Error("max_vegetation_fraction must lie in [0, 1]");
  }
  if (!(max_texture_fraction >= 0.0 && max_texture_fraction <= 1.0)) {
    throw Error("max_texture_fraction must lie in [0, 1]");
  }
}

namespace detail {

std::uint8_t neighbourhood(const std::vector<std::uint8_t>& bits, int stride, std::size_t index) {
  const std::size_t s = static_cast<std::size_t>(stride);
  const std::uint8_t* c = bits.data() + index;
  return static_cast<std::uint8_t>((c[1] ? 1 : 0) | (c[1 - s] ? 2 : 0) | (c[-s] ? 4 : 0) |
                                   (c[-1 - s] ? 8 : 0) | (c[-1] ? 16 : 0) | (c[-1 + s] ? 32 : 0) |
                                   (c[s] ? 64 : 0) | (c[1 + s] ? 128 : 0));
}

namespace {

// Yokoi 8-connectivity number; the pixel is simple iff it equals 1.
constexpr std::array<bool, 256> make_simple_table() {
  std::array<bool, 256> table{};
  for (int n = 0; n < 256; ++n) {
    const auto bg = [n](int k) { return ((n >> (k % 8)) & 1) ? 0 : 1; };
    int number = 0;
    for (int k = 0; k < 8; k += 2) number += bg(k) - bg(k) * bg(k + 1) * bg(k + 2);
    table[static_cast<std::size_t>(n)] = number == 1;
  }
  return table;
}

constexpr std::array<bool, 256> kSimple = make_simple_table();

}  // namespace

bool is_simple(std::uint8_t neighbourhood) noexcept { return kSimple[neighbourhood]; }

std::vector<int> chessboard_distance(const std::vector<std::uint8_t>& patch, int width, int height) {
  std::vector<int> dist(patch.size(), 0);
  const int inf = width + height;
  const auto at = [width](int x, int y) { return static_cast<std::size_t>(y) * width + x; };
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      if (!patch[at(x, y)]) continue;
      int d = inf;
      if (x > 0) d = std::min(d, dist[at(x - 1, y)]);
      if (y > 0) {
        d = std::min(d, dist[at(x, y - 1)]);
        if (x > 0) d = std::min(d, dist[at(x - 1, y - 1)]);
        if (x + 1 < width) d = std::min(d, dist[at(x + 1, y - 1)]);
      }
      // Border pixels of the patch are background by contract.
      dist[at(x, y)] = d == inf ? 1 : d + 1;
    }
  }
  for (int y = height - 1; y >= 0; --y) {
    for (int x = width - 1; x >= 0; --x) {
      if (!patch[at(x, y)]) continue;
      int d = dist[at(x, y)];
      if (x + 1 < width) d = std::min(d, dist[at(x + 1, y)] + 1);
      if (y + 1 < height) {
        d = std::min(d, dist[at(x, y + 1)] + 1);
        if (x + 1 < width) d = std::min(d, dist[at(x + 1, y + 1)] + 1);
        if (x > 0) d = std::min(d, dist[at(x - 1, y + 1)] + 1);
      }
      dist[at(x, y)] = d;
    }
  }
  return dist;
}

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

bool connected(const std::vector<std::uint8_t>& bits, int width) {
  const auto first = std::find(bits.begin(), bits.end(), 1);
  if (first == bits.end()) return true;
  const std::ptrdiff_t w = width;
  std::vector<std::uint8_t> seen(bits.size(), 0);
  std::vector<std::size_t> stack{static_cast<std::size_t>(first - bits.begin())};
  seen[stack.back()] = 1;
  std::size_t reached = 0;
  while (!stack.empty()) {
    const std::size_t i = stack.back();
    stack.pop_back();
    ++reached;
    for (std::ptrdiff_t d : {-w - 1, -w, -w + 1, std::ptrdiff_t{-1}, std::ptrdiff_t{1}, w - 1, w, w + 1}) {
      const auto j = static_cast<std::size_t>(static_cast<std::ptrdiff_t>(i) + d);
      if (bits[j] && !seen[j]) {
        seen[j] = 1;
        stack.push_back(j);
      }
    }
  }
  return reached == static_cast<std::size_t>(std::count(bits.begin(), bits.end(), 1));
}

}  // namespace

std::vector<std::uint8_t> open_holes(const std::vector<std::uint8_t>& patch, int width, int height) {
  const std::ptrdiff_t w = width;
  const std::ptrdiff_t steps[] = {-w, -1, 1, w};
  const std::size_t n = static_cast<std::size_t>(width) * static_cast<std::size_t>(height);

  // Background components under 4-connectivity, in row-major encounter
  // order. The zero border makes component 0 the outside.
  std::vector<int> component(n, -1);
  int components = 0;
  for (std::size_t start = 0; start < n; ++start) {
    if (patch[start] || component[start] >= 0) continue;
    std::vector<std::size_t> stack{start};
    component[start] = components;
    while (!stack.empty()) {
      const std::size_t i = stack.back();
      stack.pop_back();
      const int x = static_cast<int>(i % static_cast<std::size_t>(width));
      for (std::ptrdiff_t d : steps) {
        if ((d == -1 && x == 0) || (d == 1 && x + 1 == width)) continue;
        const std::ptrdiff_t j = static_cast<std::ptrdiff_t>(i) + d;
        if (j < 0 || j >= static_cast<std::ptrdiff_t>(n)) continue;
        const auto u = static_cast<std::size_t>(j);
        if (!patch[u] && component[u] < 0) {
          component[u] = components;
          stack.push_back(u);
        }
      }
    }
    ++components;
  }
  if (components <= 1) return patch;

  // Shortest 4-connected run of region pixels from each hole to the
  // outside, found breadth first from the hole's rim.
  std::vector<std::vector<std::size_t>> hole_pixels(static_cast<std::size_t>(components));
  for (std::size_t i = 0; i < n; ++i) {
    if (component[i] > 0) hole_pixels[static_cast<std::size_t>(component[i])].push_back(i);
  }
  const auto cut_for = [&](const std::vector<std::uint8_t>& bits, const std::vector<std::uint8_t>& outside,
                           int hole) {
    std::vector<std::size_t> parent(n, kNone);
    std::deque<std::size_t> queue;
    for (std::size_t h : hole_pixels[static_cast<std::size_t>(hole)]) {
      for (std::ptrdiff_t d : steps) {
        const auto j = static_cast<std::size_t>(static_cast<std::ptrdiff_t>(h) + d);
        if (bits[j] && parent[j] == kNone) {
          parent[j] = j;
          queue.push_back(j);
        }
      }
    }
    while (!queue.empty()) {
      const std::size_t i = queue.front();
      queue.pop_front();
      for (std::ptrdiff_t d : steps) {
        const auto j = static_cast<std::size_t>(static_cast<std::ptrdiff_t>(i) + d);
        if (!bits[j] && outside[j]) {
          std::vector<std::size_t> path{i};
          while (parent[path.back()] != path.back()) path.push_back(parent[path.back()]);
          return path;
        }
      }
      for (std::ptrdiff_t d : steps) {
        const auto j = static_cast<std::size_t>(static_cast<std::ptrdiff_t>(i) + d);
        if (bits[j] && parent[j] == kNone) {
          parent[j] = i;
          queue.push_back(j);
        }
      }
    }
    return std::vector<std::size_t>{};
  };

  // Cutting every hole and checking once is the common case; when that
  // splits the region, redo it checking each cut and keep the safe ones.
  for (const bool check_each : {false, true}) {
    std::vector<std::uint8_t> bits = patch;
    std::vector<std::uint8_t> outside(n, 0);
    for (std::size_t i = 0; i < n; ++i) outside[i] = component[i] == 0 ? 1 : 0;
    for (int hole = 1; hole < components; ++hole) {
      const std::vector<std::size_t> path = cut_for(bits, outside, hole);
      for (std::size_t i : path) bits[i] = 0;
      if (check_each && !connected(bits, width)) {
        for (std::size_t i : path) bits[i] = 1;
        continue;
      }
      for (std::size_t i : path) outside[i] = 1;
      for (std::size_t h : hole_pixels[static_cast<std::size_t>(hole)]) outside[h] = 1;
    }
    if (check_each || connected(bits, width)) return bits;
  }
  return patch;
}

std::vector<std::uint8_t> thin_patch(const std::vector<std::uint8_t>& patch, int width, int height) {
  // Medial-axis style thinning: pixels that are local maxima of the
  // chessboard distance (no 8-neighbour strictly deeper) and at least half
  // as deep as the deepest pixel are anchors and never removed. The depth
  // floor keeps one-pixel boundary bumps from growing spurs. Every other
  // pixel is peeled, shallowest level first, in row-major order, whenever
  // it is simple; each level repeats until stable. Holes are opened first
  // so that enclosed specks do not pin loops into the skeleton.
  std::vector<std::uint8_t> bits = open_holes(patch, width, height);
  const std::vector<int> dist = chessboard_distance(bits, width, height);

  int max_level = 0;
  for (int d : dist) max_level = std::max(max_level, d);
  std::vector<std::vector<std::size_t>> by_level(static_cast<std::size_t>(max_level) + 1);

  for (int y = 1; y + 1 < height; ++y) {
    for (int x = 1; x + 1 < width; ++x) {
      const std::size_t i = static_cast<std::size_t>(y) * width + x;
      if (!bits[i]) continue;
      bool anchor = 2 * dist[i] >= max_level;
      for (int dy = -1; dy <= 1 && anchor; ++dy) {
        for (int dx = -1; dx <= 1; ++dx) {
          if (dist[static_cast<std::size_t>(y + dy) * width + (x + dx)] > dist[i]) {
            anchor = false;
            break;
          }
        }
      }
      if (!anchor) by_level[static_cast<std::size_t>(dist[i])].push_back(i);
    }
  }

  std::vector<std::size_t> pending;
  for (int level = 1; level <= max_level; ++level) {
    const auto& fresh = by_level[static_cast<std::size_t>(level)];
    const std::size_t mid = pending.size();
    pending.insert(pending.end(), fresh.begin(), fresh.end());
    std::inplace_merge(pending.begin(), pending.begin() + static_cast<std::ptrdiff_t>(mid), pending.end());

    bool changed = true;
    while (changed) {
      changed = false;
      std::size_t kept = 0;
      for (std::size_t idx : pending) {
        if (is_simple(neighbourhood(bits, width, idx))) {
          bits[idx] = 0;
          changed = true;
        } else {
          pending[kept++] = idx;
        }
      }
      pending.resize(kept);
    }
  }
  return bits;
}

}  // namespace detail

namespace {

// Region cropped to its bounding box with a one-pixel background border.
struct Patch {
  int origin_x = 0;  // image x of patch column 1
  int origin_y = 0;
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> bits;
};

Patch crop(const LabelMap& labels, int label, const BoundingBox& box) {
  Patch p;
  p.origin_x = box.min_x;
  p.origin_y = box.min_y;
  p.width = box.max_x - box.min_x + 3;
  p.height = box.max_y - box.min_y + 3;
  p.bits.assign(static_cast<std::size_t>(p.width) * p.height, 0);
  for (int y = box.min_y; y <= box.max_y; ++y) {
    for (int x = box.min_x; x <= box.max_x; ++x) {
      if (labels(x, y) == label) {
        p.bits[static_cast<std::size_t>(y - box.min_y + 1) * p.width + (x - box.min_x + 1)] = 1;
      }
    }
  }
  return p;
}

BoundingBox bounding_box(const LabelMap& labels, int label) {
  if (label < 1 || label > labels.region_count()) {
    throw Error("label " + std::to_string(label) + " out of range 1.." + std::to_string(labels.region_count()));
  }
  BoundingBox box{labels.width(), labels.height(), -1, -1};
  for (int y = 0; y < labels.height(); ++y) {
    for (int x = 0; x < labels.width(); ++x) {
      if (labels(x, y) != label) continue;
      box.min_x = std::min(box.min_x, x);
      box.min_y = std::min(box.min_y, y);
      box.max_x = std::max(box.max_x, x);
      box.max_y = std::max(box.max_y, y);
    }
  }
  return box;
}

double patch_width(const Patch& p) {
  const auto dist = detail::chessboard_distance(p.bits, p.width, p.height);
  return 2.0 * *std::max_element(dist.begin(), dist.end());
}

}  // namespace

std::vector<RegionStats> region_stats(const LabelMap& labels) {
  const int n = labels.region_count();
  std::vector<RegionStats> stats(static_cast<std::size_t>(n));
  std::vector<double> sum_x(stats.size(), 0.0);
  std::vector<double> sum_y(stats.size(), 0.0);
  for (int i = 0; i < n; ++i) {
    stats[static_cast<std::size_t>(i)].label = i + 1;
    stats[static_cast<std::size_t>(i)].bbox = {labels.width(), labels.height(), -1, -1};
  }
  for (int y = 0; y < labels.height(); ++y) {
    for (int x = 0; x < labels.width(); ++x) {
      const int l = labels(x, y);
      if (l == 0) continue;
      const auto k = static_cast<std::size_t>(l - 1);
      auto& s = stats[k];
      ++s.area;
      sum_x[k] += x;
      sum_y[k] += y;
      s.bbox.min_x = std::min(s.bbox.min_x, x);
      s.bbox.min_y = std::min(s.bbox.min_y, y);
      s.bbox.max_x = std::max(s.bbox.max_x, x);
      s.bbox.max_y = std::max(s.bbox.max_y, y);
    }
  }
  for (std::size_t k = 0; k < stats.size(); ++k) {
    auto& s = stats[k];
    s.centroid_x = sum_x[k] / static_cast<double>(s.area);
    s.centroid_y = sum_y[k] / static_cast<double>(s.area);
    const Patch p = crop(labels, s.label, s.bbox);
    s.width_estimate = patch_width(p);
    const auto skeleton = detail::thin_patch(p.bits, p.width, p.height);
    s.central_pixel_count = std::count(skeleton.begin(), skeleton.end(), 1);
  }
  return stats;
}

BinaryMask central_pixels(const LabelMap& labels, int label) {
  const BoundingBox box = bounding_box(labels, label);
  const Patch p = crop(labels, label, box);
  const auto skeleton = detail::thin_patch(p.bits, p.width, p.height);
  BinaryMask out(labels.width(), labels.height(), 0);
  for (int py = 1; py + 1 < p.height; ++py) {
    for (int px = 1; px + 1 < p.width; ++px) {
      if (skeleton[static_cast<std::size_t>(py) * p.width + px]) out(p.origin_x + px - 1, p.origin_y + py - 1) = 1;
    }
  }
  return out;
}

double region_width(const LabelMap& labels, int label) {
  const BoundingBox box = bounding_box(labels, label);
  return patch_width(crop(labels, label, box));
}

double shape_ratio(const RegionStats& stats) {
  if (stats.area < 1) throw Error("shape_ratio needs a non-empty region");
  return static_cast<double>(stats.central_pixel_count) / std::sqrt(static_cast<double>(stats.area));
}

std::vector<bool> region_verdicts(const LabelMap& labels, const std::vector<RegionStats>& stats,
                                  const RegionFilterConfig& cfg, const BinaryMask& vegetation,
                                  const BinaryMask& texture) {
  cfg.validate();
  require_same_shape(labels, vegetation, "filter_regions (vegetation mask)");
  require_same_shape(labels, texture, "filter_regions (texture mask)");
  const auto n = static_cast<std::size_t>(labels.region_count());
  if (stats.size() != n) throw Error("filter_regions: stats do not match the label map");

  std::vector<std::int64_t> veg(n, 0);
  std::vector<std::int64_t> tex(n, 0);
  const auto l = labels.labels().values();
  const auto v = vegetation.values();
  const auto t = texture.values();
  for (std::size_t i = 0; i < l.size(); ++i) {
    if (l[i] == 0) continue;
    const auto k = static_cast<std::size_t>(l[i] - 1);
    veg[k] += v[i] ? 1 : 0;
    tex[k] += t[i] ? 1 : 0;
  }

  std::vector<bool> keep(n, false);
  for (std::size_t k = 0; k < n; ++k) {
    const RegionStats& s = stats[k];
    if (s.label != static_cast<int>(k) + 1) throw Error("filter_regions: stats must be in ascending label order");
    const double area = static_cast<double>(s.area);
    const double ratio = shape_ratio(s);
    const bool ratio_ok = cfg.ratio_direction == RatioDirection::AtLeast ? ratio >= cfg.ratio_threshold
                                                                         : ratio <= cfg.ratio_threshold;
    keep[k] = s.area >= cfg.min_area && (cfg.min_width <= 0.0 || s.width_estimate >= cfg.min_width) && ratio_ok &&
              static_cast<double>(veg[k]) / area <= cfg.max_vegetation_fraction &&
              static_cast<double>(tex[k]) / area <= cfg.max_texture_fraction;
  }
  return keep;
}

LabelMap filter_regions(const LabelMap& labels, const std::vector<RegionStats>& stats,
                        const RegionFilterConfig& cfg, const BinaryMask& vegetation, const BinaryMask& texture) {
  return keep_regions(labels, region_verdicts(labels, stats, cfg, vegetation, texture));
}

}  // namespace openspace::seg
