#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "openspace/change.hpp"
#include "openspace/pipeline.hpp"
#include "openspace/raster.hpp"
#include "openspace/segmentation.hpp"

namespace openspace::report {

inline constexpr Rgb kOpenSpaceColor{255, 0, 0};
inline constexpr Rgb kLostColor{255, 0, 0};
inline constexpr Rgb kGainedColor{0, 255, 0};
inline constexpr Rgb kUnchangedColor{128, 128, 128};

/// Masked pixels become round((1 - alpha) * pixel + alpha * color) per channel.
ColorRaster render_overlay(const ColorRaster& img, const BinaryMask& mask, Rgb color = kOpenSpaceColor,
                           double alpha = 0.6);

/// Lost pixels red, gained green, unchanged gray, each blended with alpha.
ColorRaster render_change(const change::ChangeMap& cm, const ColorRaster& base, double alpha = 0.6);

inline constexpr const char* kRegionCsvHeader = "label,area,centroid_x,centroid_y";

/// One CSV row: label, area and the centroid at three decimals.
std::string format_region_row(int label, std::int64_t area, double centroid_x, double centroid_y);

std::string region_csv(const std::vector<seg::RegionStats>& regions);
void write_region_csv(const std::vector<seg::RegionStats>& regions, const std::filesystem::path& path);

/// {"dates": {iso: area}, "changes": [{earlier, later, earlier_area,
/// later_area, gained, lost, unchanged, net, percent}]}; percent is null
/// when the earlier area is zero.
nlohmann::ordered_json summary_json(const std::map<Date, std::int64_t>& totals,
                                    const std::vector<change::ChangeSummary>& summaries);
void write_summary_json(const std::map<Date, std::int64_t>& totals,
                        const std::vector<change::ChangeSummary>& summaries, const std::filesystem::path& path);

nlohmann::ordered_json result_json(const pipeline::ExtractionResult& result);

/// Pretty-printed JSON with a trailing newline.
void write_json(const nlohmann::ordered_json& doc, const std::filesystem::path& path);
void write_text(const std::string& text, const std::filesystem::path& path);

}  // namespace openspace::report
