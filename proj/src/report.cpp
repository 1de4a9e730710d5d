#include "openspace/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>

namespace openspace::report {

namespace {

std::uint8_t blend(std::uint8_t base, std::uint8_t target, double alpha) {
  const double v = std::round((1.0 - alpha) * base + alpha * target);
  return static_cast<std::uint8_t>(std::clamp(v, 0.0, 255.0));
}

Rgb blend(Rgb base, Rgb target, double alpha) {
  return {blend(base.r, target.r, alpha), blend(base.g, target.g, alpha), blend(base.b, target.b, alpha)};
}

void check_alpha(double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw Error("overlay alpha must lie in [0, 1]");
}

}  // namespace

ColorRaster render_overlay(const ColorRaster& img, const BinaryMask& mask, Rgb color, double alpha) {
  require_same_shape(img, mask, "render_overlay");
  check_alpha(alpha);
  ColorRaster out = img;
  auto px = out.values();
  const auto bits = mask.values();
  for (std::size_t i = 0; i < px.size(); ++i) {
    if (bits[i]) px[i] = blend(px[i], color, alpha);
  }
  return out;
}

ColorRaster render_change(const change::ChangeMap& cm, const ColorRaster& base, double alpha) {
  require_same_shape(base, cm.gained, "render_change");
  require_same_shape(base, cm.lost, "render_change");
  require_same_shape(base, cm.unchanged, "render_change");
  check_alpha(alpha);
  ColorRaster out = base;
  auto px = out.values();
  const auto g = cm.gained.values();
  const auto l = cm.lost.values();
  const auto u = cm.unchanged.values();
  for (std::size_t i = 0; i < px.size(); ++i) {
    if (l[i]) {
      px[i] = blend(px[i], kLostColor, alpha);
    } else if (g[i]) {
      px[i] = blend(px[i], kGainedColor, alpha);
    } else if (u[i]) {
      px[i] = blend(px[i], kUnchangedColor, alpha);
    }
  }
  return out;
}

std::string format_region_row(int label, std::int64_t area, double centroid_x, double centroid_y) {
  char buf[128];
  std::snprintf(buf, sizeof buf, "%d,%lld,%.3f,%.3f", label, static_cast<long long>(area), centroid_x, centroid_y);
  return buf;
}

std::string region_csv(const std::vector<seg::RegionStats>& regions) {
  std::string out = kRegionCsvHeader;
  out += '\n';
  for (const auto& r : regions) {
    out += format_region_row(r.label, r.area, r.centroid_x, r.centroid_y);
    out += '\n';
  }
  return out;
}

void write_text(const std::string& text, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(path.string() + ": cannot open for writing");
  out << text;
  if (!out) throw Error(path.string() + ": write failed");
}

void write_region_csv(const std::vector<seg::RegionStats>& regions, const std::filesystem::path& path) {
  write_text(region_csv(regions), path);
}

nlohmann::ordered_json summary_json(const std::map<Date, std::int64_t>& totals,
                                    const std::vector<change::ChangeSummary>& summaries) {
  nlohmann::ordered_json doc;
  doc["dates"] = nlohmann::ordered_json::object();
  for (const auto& [date, area] : totals) doc["dates"][date.iso()] = area;
  doc["changes"] = nlohmann::ordered_json::array();
  for (const auto& s : summaries) {
    nlohmann::ordered_json c;
    c["earlier"] = s.earlier.iso();
    c["later"] = s.later.iso();
    c["earlier_area"] = s.earlier_area;
    c["later_area"] = s.later_area;
    c["gained"] = s.gained_area;
    c["lost"] = s.lost_area;
    c["unchanged"] = s.unchanged_area;
    c["net"] = s.net_change;
    c["percent"] = s.percent_change ? nlohmann::ordered_json(*s.percent_change) : nlohmann::ordered_json(nullptr);
    doc["changes"].push_back(std::move(c));
  }
  return doc;
}

void write_json(const nlohmann::ordered_json& doc, const std::filesystem::path& path) {
  write_text(doc.dump(2) + "\n", path);
}

void write_summary_json(const std::map<Date, std::int64_t>& totals,
                        const std::vector<change::ChangeSummary>& summaries, const std::filesystem::path& path) {
  write_json(summary_json(totals, summaries), path);
}

nlohmann::ordered_json result_json(const pipeline::ExtractionResult& result) {
  nlohmann::ordered_json doc;
  doc["width"] = result.open_mask.width();
  doc["height"] = result.open_mask.height();
  doc["open_area"] = count(result.open_mask);
  doc["stage1_area"] = count(result.stage1_mask);
  doc["stage2_added_regions"] = result.stage2_added_regions;
  if (result.spectrum) {
    doc["spectrum"] = {{"mean", result.spectrum->mean},
                       {"std", result.spectrum->std},
                       {"sample_count", result.spectrum->sample_count}};
  } else {
    doc["spectrum"] = nullptr;
  }
  doc["regions"] = nlohmann::ordered_json::array();
  for (const auto& r : result.regions) {
    doc["regions"].push_back({{"label", r.label},
                              {"area", r.area},
                              {"centroid_x", r.centroid_x},
                              {"centroid_y", r.centroid_y},
                              {"bbox", {r.bbox.min_x, r.bbox.min_y, r.bbox.max_x, r.bbox.max_y}},
                              {"width_estimate", r.width_estimate},
                              {"central_pixel_count", r.central_pixel_count}});
  }
  doc["warnings"] = result.warnings;
  return doc;
}

}  // namespace openspace::report
