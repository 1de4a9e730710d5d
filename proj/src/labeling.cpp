#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "openspace/segmentation.hpp"

namespace openspace::seg {

std::string_view to_string(Connectivity conn) noexcept { return conn == Connectivity::Four ? "4" : "8"; }

Connectivity connectivity_from_int(int neighbours) {
  if (neighbours == 4) return Connectivity::Four;
  if (neighbours == 8) return Connectivity::Eight;
  throw Error("connectivity must be 4 or 8, got " + std::to_string(neighbours));
}

int to_int(Connectivity conn) noexcept { return conn == Connectivity::Four ? 4 : 8; }

LabelMap::LabelMap(LabelGrid labels, int region_count) : labels_(std::move(labels)), region_count_(region_count) {
  if (region_count < 0) throw Error("negative region count");
  for (std::int32_t v : labels_.values()) {
    if (v < 0 || v > region_count) {
      throw Error("label " + std::to_string(v) + " outside 0.." + std::to_string(region_count));
    }
  }
}

BinaryMask LabelMap::mask() const {
  BinaryMask out(width(), height());
  std::transform(labels_.values().begin(), labels_.values().end(), out.values().begin(),
                 [](std::int32_t v) -> std::uint8_t { return v != 0 ? 1 : 0; });
  return out;
}

BinaryMask LabelMap::region_mask(int label) const {
  if (label < 1 || label > region_count_) {
    throw Error("label " + std::to_string(label) + " out of range 1.." + std::to_string(region_count_));
  }
  BinaryMask out(width(), height());
  std::transform(labels_.values().begin(), labels_.values().end(), out.values().begin(),
                 [label](std::int32_t v) -> std::uint8_t { return v == label ? 1 : 0; });
  return out;
}

namespace {

class DisjointSet {
 public:
  std::int32_t make() {
    parent_.push_back(static_cast<std::int32_t>(parent_.size()));
    return parent_.back();
  }

  std::int32_t find(std::int32_t x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      auto& p = parent_[static_cast<std::size_t>(x)];
      p = parent_[static_cast<std::size_t>(p)];
      x = p;
    }
    return x;
  }

  void unite(std::int32_t a, std::int32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b) std::swap(a, b);
    parent_[static_cast<std::size_t>(a)] = b;
  }

  std::size_t size() const noexcept { return parent_.size(); }

 private:
  std::vector<std::int32_t> parent_;
};

}  // namespace

LabelMap label_components(const BinaryMask& mask, Connectivity conn) {
  const int w = mask.width();
  const int h = mask.height();
  // Provisional labels start at 1; slot 0 of the disjoint set is unused.
  LabelGrid provisional(w, h, 0);
  DisjointSet sets;
  sets.make();

  const bool eight = conn == Connectivity::Eight;
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      if (!mask(x, y)) continue;
      std::int32_t found = 0;
      const auto visit = [&](int nx, int ny) {
        if (nx < 0 || ny < 0 || nx >= w) return;
        const std::int32_t l = provisional(nx, ny);
        if (l == 0) return;
        if (found == 0) {
          found = l;
        } else {
          sets.unite(found, l);
        }
      };
      visit(x - 1, y);
      visit(x, y - 1);
      if (eight) {
        visit(x - 1, y - 1);
        visit(x + 1, y - 1);
      }
      provisional(x, y) = found != 0 ? found : sets.make();
    }
  }

  // Final ids follow the first row-major appearance of each set.
  std::vector<std::int32_t> dense(sets.size(), 0);
  std::int32_t next = 0;
  LabelGrid out(w, h, 0);
  auto src = provisional.values();
  auto dst = out.values();
  for (std::size_t i = 0; i < src.size(); ++i) {
    if (src[i] == 0) continue;
    const std::int32_t root = sets.find(src[i]);
    auto& id = dense[static_cast<std::size_t>(root)];
    if (id == 0) id = ++next;
    dst[i] = id;
  }
  return LabelMap(std::move(out), next);
}

LabelMap keep_regions(const LabelMap& labels, const std::vector<bool>& keep) {
  if (keep.size() != static_cast<std::size_t>(labels.region_count())) {
    throw Error("keep_regions: verdict count does not match region count");
  }
  std::vector<std::int32_t> renumber(keep.size() + 1, 0);
  std::int32_t next = 0;
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i]) renumber[i + 1] = ++next;
  }
  LabelGrid out(labels.width(), labels.height(), 0);
  auto src = labels.labels().values();
  auto dst = out.values();
  for (std::size_t i = 0; i < src.size(); ++i) dst[i] = renumber[static_cast<std::size_t>(src[i])];
  return LabelMap(std::move(out), next);
}

}  // namespace openspace::seg
