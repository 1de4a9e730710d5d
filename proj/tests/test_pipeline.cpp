#include <doctest.h>

#include <cmath>

#include "openspace/pipeline.hpp"
#include "openspace/synthetic.hpp"
#include "support/helpers.hpp"

using namespace openspace;
using namespace openspace::pipeline;

namespace {

double iou(const BinaryMask& a, const BinaryMask& b) {
  return static_cast<double>(count(mask_and(a, b))) / static_cast<double>(count(mask_or(a, b)));
}

PipelineConfig band_config() {
  PipelineConfig cfg;
  cfg.polarity = Polarity::Band;
  return cfg;
}

BinaryMask rect_truth(const ColorRaster& img, const synthetic::Rect& r) {
  return testing::rect_mask(img.width(), img.height(), r.x, r.y, r.width, r.height);
}

}  // namespace

TEST_CASE("spectrum statistics") {
  const ColorRaster flat(4, 3, Rgb{10, 20, 30});
  const SpectrumStats s = spectrum_stats(flat, BinaryMask(4, 3, 1));
  CHECK(s.mean == std::array<double, 3>{10, 20, 30});
  CHECK(s.std == std::array<double, 3>{0, 0, 0});
  CHECK(s.sample_count == 12);

  ColorRaster two(2, 1);
  two(0, 0) = {0, 0, 0};
  two(1, 0) = {10, 10, 10};
  const SpectrumStats t = spectrum_stats(two, BinaryMask(2, 1, 1));
  CHECK(t.mean == std::array<double, 3>{5, 5, 5});
  CHECK(t.std == std::array<double, 3>{5, 5, 5});

  CHECK_THROWS_AS(spectrum_stats(two, BinaryMask(2, 1, 0)), Error);
}

TEST_CASE("spectrum acceptance rule") {
  SpectrumStats ref;
  ref.mean = {100, 100, 100};
  ref.std = {3, 3, 3};
  CHECK(spectrum_accepts(ref, {100, 100, 100}, 0.5));
  CHECK(spectrum_accepts(ref, {100, 100, 100}, 0.0));
  CHECK_FALSE(spectrum_accepts(ref, {130, 100, 100}, 2.0));
  CHECK(spectrum_accepts(ref, {106, 94, 100}, 2.0));
  // Zero spread is floored at 1.
  ref.std = {0, 0, 0};
  CHECK(spectrum_accepts(ref, {101.5, 100, 100}, 2.0));
  CHECK_FALSE(spectrum_accepts(ref, {102.5, 100, 100}, 2.0));
}

TEST_CASE("uniform image has no open space under the defaults") {
  const ExtractionResult r = extract(ColorRaster(32, 32, Rgb{120, 120, 120}), PipelineConfig{});
  CHECK(count(r.open_mask) == 0);
  CHECK_FALSE(r.spectrum.has_value());
  CHECK(r.warnings.size() == 1);
  CHECK(r.regions.empty());
}

TEST_CASE("tiny images are rejected") {
  CHECK_THROWS_AS(extract(ColorRaster(2, 5), PipelineConfig{}), Error);
}

TEST_CASE("all-vegetation image yields nothing") {
  const ColorRaster green(40, 40, Rgb{0, 255, 0});
  CHECK(count(extract(green, PipelineConfig{}).open_mask) == 0);
  // Under band polarity the whole frame is a candidate; vegetation rejects it.
  const auto s1 = stage_one(green, band_config());
  CHECK(count(s1.trace.candidates) == green.size());
  CHECK(count(extract(green, band_config()).open_mask) == 0);
}

TEST_CASE("stage toggles pass data through") {
  PipelineConfig cfg;
  cfg.stages = {false, false, false, false};
  std::mt19937 rng(3);
  const ColorRaster img = testing::random_color(rng, 20, 20);
  const FilterTrace t = run_filters(img, cfg);
  CHECK(t.filtered == t.gray);
  CHECK(t.band == filters::threshold_band(t.gray, cfg.band));
  CHECK(t.candidates == mask_not(t.band));
}

TEST_CASE("configuration validation") {
  PipelineConfig cfg;
  CHECK_NOTHROW(cfg.validate());
  cfg.spectrum_k = -1;
  CHECK_THROWS_AS(cfg.validate(), Error);
  cfg = {};
  cfg.texture_window = 4;
  CHECK_THROWS_AS(cfg.validate(), Error);
  cfg = {};
  cfg.band = {60, 10};
  CHECK_THROWS_AS(cfg.validate(), Error);
  CHECK(parse_polarity("Band") == Polarity::Band);
  CHECK_THROWS_AS(parse_polarity("inside"), Error);
}

TEST_CASE("default filters reject road-like strips") {
  BinaryMask strip(256, 9, 0);
  for (int y = 3; y < 6; ++y) {
    for (int x = 0; x < 256; ++x) strip(x, y) = 1;
  }
  const seg::LabelMap lm = seg::label_components(strip);
  const auto stats = seg::region_stats(lm);
  const BinaryMask clear(256, 9, 0);
  CHECK(seg::filter_regions(lm, stats, PipelineConfig::default_stage1_filter(), clear, clear).region_count() == 0);
  CHECK(seg::filter_regions(lm, stats, PipelineConfig::default_stage2_filter(), clear, clear).region_count() == 0);
}

TEST_CASE("synthetic urban scene") {
  const synthetic::Scene scene = synthetic::render(synthetic::urban_scene());
  const PipelineConfig cfg = band_config();
  const StageOneResult first = stage_one(scene.image, cfg);
  const ExtractionResult r = stage_two(scene.image, first, cfg);

  const BinaryMask field = rect_truth(scene.image, synthetic::urban_scene_field());
  const BinaryMask patch = rect_truth(scene.image, synthetic::urban_scene_patch());
  const BinaryMask road = rect_truth(scene.image, synthetic::urban_scene_road());

  CHECK(first.labels.region_count() == 1);
  CHECK(iou(first.mask, field) >= 0.8);
  CHECK(count(mask_and(first.mask, patch)) == 0);
  CHECK(count(mask_and(r.open_mask, patch)) >= count(patch) / 2);
  CHECK(r.stage2_added_regions >= 1);
  CHECK(count(mask_and(r.open_mask, road)) == 0);
  CHECK(iou(r.open_mask, scene.open_truth) >= 0.8);
  CHECK(is_subset(r.stage1_mask, r.open_mask));
  REQUIRE(r.spectrum.has_value());
  CHECK(std::abs(r.spectrum->mean[0] - 190.0) < 15.0);

  // Final statistics describe the union.
  std::int64_t total = 0;
  for (const auto& s : r.regions) total += s.area;
  CHECK(total == static_cast<std::int64_t>(count(r.open_mask)));
}

TEST_CASE("zero spectrum tolerance with no gap regions reproduces stage one") {
  const synthetic::Scene scene = synthetic::render(synthetic::urban_scene());
  PipelineConfig cfg = band_config();
  cfg.spectrum_k = 0.0;
  const StageOneResult first = stage_one(scene.image, cfg);
  const ExtractionResult r = stage_two(scene.image, first, cfg);
  CHECK(r.open_mask == first.mask);
  CHECK(r.stage2_added_regions == 0);
}

TEST_CASE("extraction is deterministic") {
  const synthetic::Scene scene = synthetic::render(synthetic::urban_scene(3));
  const ExtractionResult a = extract(scene.image, band_config());
  const ExtractionResult b = extract(scene.image, band_config());
  CHECK(a.open_mask == b.open_mask);
  CHECK(a.label_map == b.label_map);
}

TEST_CASE("shrinking fields give decreasing areas") {
  std::int64_t previous = -1;
  for (int side : {100, 90, 78}) {
    const synthetic::Scene scene = synthetic::render(synthetic::dated_scene(side));
    const auto area = static_cast<std::int64_t>(count(extract(scene.image, band_config()).open_mask));
    CAPTURE(side);
    CHECK(area > 0);
    if (previous >= 0) CHECK(area < previous);
    previous = area;
  }
}
