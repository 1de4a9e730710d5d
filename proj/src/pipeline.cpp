#include "openspace/pipeline.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

namespace openspace::pipeline {

std::string_view to_string(Polarity polarity) noexcept {
  return polarity == Polarity::Band ? "band" : "complement";
}

Polarity parse_polarity(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
  if (lower == "band") return Polarity::Band;
  if (lower == "complement") return Polarity::Complement;
  throw Error("unknown polarity '" + std::string(text) + "' (band|complement)");
}

seg::RegionFilterConfig PipelineConfig::default_stage1_filter() {
  seg::RegionFilterConfig f;
  f.min_area = 400;
  f.min_width = 20.0;
  f.ratio_threshold = 1.0;
  f.ratio_direction = seg::RatioDirection::AtMost;
  f.max_vegetation_fraction = 0.5;
  f.max_texture_fraction = 0.5;
  return f;
}

seg::RegionFilterConfig PipelineConfig::default_stage2_filter() {
  seg::RegionFilterConfig f = default_stage1_filter();
  f.min_area = 30;
  f.min_width = 0.0;
  // Small pieces have ragged skeletons; the spectrum test carries stage two.
  f.ratio_threshold = 2.0;
  return f;
}

void PipelineConfig::validate() const {
  canny.validate();
  outlier.validate();
  band.validate();
  stage1_filter.validate();
  stage2_filter.validate();
  if (texture_window < 3 || texture_window % 2 == 0) throw Error("texture window must be odd and >= 3");
  if (!(texture_var_threshold >= 0.0)) throw Error("texture variance threshold must be >= 0");
  if (!(spectrum_k >= 0.0) || !std::isfinite(spectrum_k)) throw Error("spectrum_k must be a finite value >= 0");
}

SpectrumStats spectrum_stats(const ColorRaster& img, const BinaryMask& mask) {
  require_same_shape(img, mask, "spectrum_stats");
  SpectrumStats s;
  std::array<double, 3> sum{};
  const auto px = img.values();
  const auto bits = mask.values();
  for (std::size_t i = 0; i < px.size(); ++i) {
    if (!bits[i]) continue;
    ++s.sample_count;
    sum[0] += px[i].r;
    sum[1] += px[i].g;
    sum[2] += px[i].b;
  }
  if (s.sample_count == 0) throw Error("spectrum_stats: mask has no set pixels");
  const double n = static_cast<double>(s.sample_count);
  for (int c = 0; c < 3; ++c) s.mean[static_cast<std::size_t>(c)] = sum[static_cast<std::size_t>(c)] / n;
  std::array<double, 3> sq{};
  for (std::size_t i = 0; i < px.size(); ++i) {
    if (!bits[i]) continue;
    const double d[3] = {px[i].r - s.mean[0], px[i].g - s.mean[1], px[i].b - s.mean[2]};
    for (std::size_t c = 0; c < 3; ++c) sq[c] += d[c] * d[c];
  }
  for (std::size_t c = 0; c < 3; ++c) s.std[c] = std::sqrt(sq[c] / n);
  return s;
}

bool spectrum_accepts(const SpectrumStats& reference, const std::array<double, 3>& candidate_mean, double k) {
  for (std::size_t c = 0; c < 3; ++c) {
    const double spread = std::max(reference.std[c], 1.0);
    if (std::abs(candidate_mean[c] - reference.mean[c]) > k * spread) return false;
  }
  return true;
}

FilterTrace run_filters(const ColorRaster& img, const PipelineConfig& cfg) {
  cfg.validate();
  if (img.width() < 3 || img.height() < 3) {
    throw Error("image must be at least 3x3, got " + std::to_string(img.width()) + "x" + std::to_string(img.height()));
  }
  FilterTrace t;
  t.gray = to_gray(img);

  if (cfg.stages.canny) {
    t.edges = filters::canny_edges(t.gray, cfg.canny);
    t.edge_image = mask_to_gray(t.edges);
  } else {
    t.edges = BinaryMask(img.width(), img.height(), 0);
    t.edge_image = t.gray;
  }
  if (cfg.stages.invert) t.edge_image = invert(t.edge_image);

  t.gradient = cfg.stages.sobel ? clamp_to_gray(filters::sobel_magnitude(t.edge_image)) : t.edge_image;
  t.filtered = cfg.stages.outlier ? filters::remove_outliers(t.gradient, cfg.outlier) : t.gradient;
  t.band = filters::threshold_band(t.filtered, cfg.band);
  t.candidates = cfg.polarity == Polarity::Band ? t.band : mask_not(t.band);

  t.vegetation = filters::vegetation_mask(img, cfg.vegetation_exg_threshold);
  t.texture = filters::texture_mask(t.gray, cfg.texture_window, cfg.texture_var_threshold);
  return t;
}

StageOneResult stage_one(const ColorRaster& img, const PipelineConfig& cfg) {
  StageOneResult r;
  r.trace = run_filters(img, cfg);
  const seg::LabelMap all = seg::label_components(r.trace.candidates, cfg.connectivity);
  const auto stats = seg::region_stats(all);
  r.labels = seg::filter_regions(all, stats, cfg.stage1_filter, r.trace.vegetation, r.trace.texture);
  r.mask = r.labels.mask();
  return r;
}

namespace {

ExtractionResult finish(BinaryMask open_mask, BinaryMask stage1_mask, const PipelineConfig& cfg) {
  ExtractionResult out;
  out.label_map = seg::label_components(open_mask, cfg.connectivity);
  out.regions = seg::region_stats(out.label_map);
  out.open_mask = std::move(open_mask);
  out.stage1_mask = std::move(stage1_mask);
  return out;
}

}  // namespace

ExtractionResult stage_two(const ColorRaster& img, const StageOneResult& first, const PipelineConfig& cfg) {
  require_same_shape(img, first.mask, "stage_two");
  if (count(first.mask) == 0) {
    ExtractionResult out = finish(first.mask, first.mask, cfg);
    out.warnings.emplace_back("stage one found no open space; spectrum unavailable, stage two skipped");
    return out;
  }

  const SpectrumStats reference = spectrum_stats(img, first.mask);

  // Stage-one regions are whole components of the same candidate mask, so a
  // candidate either coincides with one of them or is disjoint from all.
  const seg::LabelMap candidates = seg::label_components(first.trace.candidates, cfg.connectivity);
  const auto stats = seg::region_stats(candidates);
  std::vector<bool> keep =
      seg::region_verdicts(candidates, stats, cfg.stage2_filter, first.trace.vegetation, first.trace.texture);

  const auto n = static_cast<std::size_t>(candidates.region_count());
  std::vector<std::array<double, 3>> sums(n, {0.0, 0.0, 0.0});
  std::vector<bool> in_stage_one(n, false);
  const auto labels = candidates.labels().values();
  const auto px = img.values();
  const auto s1 = first.mask.values();
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == 0) continue;
    const auto k = static_cast<std::size_t>(labels[i] - 1);
    sums[k][0] += px[i].r;
    sums[k][1] += px[i].g;
    sums[k][2] += px[i].b;
    if (s1[i]) in_stage_one[k] = true;
  }

  std::int64_t added = 0;
  for (std::size_t k = 0; k < n; ++k) {
    if (!keep[k] || in_stage_one[k]) {
      keep[k] = false;
      continue;
    }
    const double area = static_cast<double>(stats[k].area);
    const std::array<double, 3> mean{sums[k][0] / area, sums[k][1] / area, sums[k][2] / area};
    keep[k] = spectrum_accepts(reference, mean, cfg.spectrum_k);
    if (keep[k]) ++added;
  }

  const BinaryMask extra = seg::keep_regions(candidates, keep).mask();
  ExtractionResult out = finish(mask_or(first.mask, extra), first.mask, cfg);
  out.spectrum = reference;
  out.stage2_added_regions = added;
  return out;
}

ExtractionResult extract(const ColorRaster& img, const PipelineConfig& cfg) {
  return stage_two(img, stage_one(img, cfg), cfg);
}

}  // namespace openspace::pipeline
