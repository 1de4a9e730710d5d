#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "openspace/filters.hpp"
#include "openspace/raster.hpp"
#include "openspace/segmentation.hpp"

namespace openspace::pipeline {

/// Which side of the band threshold is open space.
enum class Polarity {
  Complement,  // pixels outside [lower, upper]
  Band,        // pixels inside [lower, upper]
};

std::string_view to_string(Polarity polarity) noexcept;
Polarity parse_polarity(std::string_view text);

/// Individually switchable stages of the filtering chain. A disabled stage
/// passes its input through unchanged.
struct StageToggles {
  bool canny = true;
  bool invert = true;
  bool sobel = true;
  bool outlier = true;

  friend bool operator==(const StageToggles&, const StageToggles&) = default;
};

struct PipelineConfig {
  filters::CannyParams canny;
  filters::OutlierParams outlier;
  filters::BandThreshold band;
  StageToggles stages;
  Polarity polarity = Polarity::Complement;
  seg::Connectivity connectivity = seg::Connectivity::Eight;
  int vegetation_exg_threshold = 40;
  int texture_window = 5;
  double texture_var_threshold = 300.0;
  seg::RegionFilterConfig stage1_filter = default_stage1_filter();
  seg::RegionFilterConfig stage2_filter = default_stage2_filter();
  double spectrum_k = 2.0;

  static seg::RegionFilterConfig default_stage1_filter();
  static seg::RegionFilterConfig default_stage2_filter();

  void validate() const;
};

struct SpectrumStats {
  std::array<double, 3> mean{};
  std::array<double, 3> std{};
  std::int64_t sample_count = 0;
};

/// Per-channel population mean and standard deviation over the set bits.
SpectrumStats spectrum_stats(const ColorRaster& img, const BinaryMask& mask);

/// Every intermediate image of the filtering chain, for inspection.
struct FilterTrace {
  GrayRaster gray;
  BinaryMask edges;           // Canny output (all clear when disabled)
  GrayRaster edge_image;      // edges rendered 255 on 0, inverted when enabled
  GrayRaster gradient;        // clamped Sobel magnitude
  GrayRaster filtered;        // after outlier removal
  BinaryMask band;            // in-band pixels
  BinaryMask candidates;      // open-space candidates after polarity
  BinaryMask vegetation;
  BinaryMask texture;
};

/// Runs gray -> Canny -> invert -> Sobel -> outlier removal -> band and
/// the vegetation / texture masks. Throws for images smaller than 3x3.
FilterTrace run_filters(const ColorRaster& img, const PipelineConfig& cfg);

struct StageOneResult {
  seg::LabelMap labels;
  BinaryMask mask;
  FilterTrace trace;
};

StageOneResult stage_one(const ColorRaster& img, const PipelineConfig& cfg);

struct ExtractionResult {
  BinaryMask open_mask;
  seg::LabelMap label_map;
  std::vector<seg::RegionStats> regions;
  std::optional<SpectrumStats> spectrum;  // absent when stage one found nothing
  BinaryMask stage1_mask;
  std::int64_t stage2_added_regions = 0;
  std::vector<std::string> warnings;
};

/// Adds candidate regions (stage-two filter, no width rule) whose mean colour
/// lies within spectrum_k standard deviations of the stage-one spectrum on
/// every channel. Standard deviations are floored at 1.
ExtractionResult stage_two(const ColorRaster& img, const StageOneResult& first, const PipelineConfig& cfg);

ExtractionResult extract(const ColorRaster& img, const PipelineConfig& cfg);

/// Stage-two admission rule on a single candidate mean.
bool spectrum_accepts(const SpectrumStats& reference, const std::array<double, 3>& candidate_mean, double k);

}  // namespace openspace::pipeline
