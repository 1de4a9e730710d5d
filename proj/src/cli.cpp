#include "openspace/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <future>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "openspace/change.hpp"
#include "openspace/config.hpp"
#include "openspace/image_io.hpp"
#include "openspace/kernels.hpp"
#include "openspace/pipeline.hpp"
#include "openspace/report.hpp"

namespace openspace::cli {
namespace fs = std::filesystem;

namespace {

// Flag values for `extract`; unset optionals leave the configuration alone.
struct ExtractFlags {
  std::string input;
  std::string config_path;
  std::string out_dir = "out";
  std::optional<int> lower;
  std::optional<int> upper;
  std::optional<double> radius;
  std::optional<double> outlier_threshold;
  std::optional<std::string> outlier_direction;
  std::optional<int> connectivity;
  std::optional<double> min_width;
  std::optional<std::int64_t> min_area;
  std::optional<double> ratio_threshold;
  std::optional<std::string> ratio_direction;
  std::optional<double> spectrum_k;
  std::optional<std::string> polarity;
  bool print_config = false;
};

struct ChangeFlags {
  std::string before;
  std::string after;
  std::string before_date;
  std::string after_date;
  std::string out_dir = "out";
  std::int64_t min_blob = 0;
};

struct SeriesFlags {
  std::vector<std::string> inputs;
  std::string config_path;
  std::string out_dir = "out";
};

std::uint8_t to_byte(int v, const char* flag) {
  if (v < 0 || v > 255) throw Error(std::string(flag) + " must lie in 0..255");
  return static_cast<std::uint8_t>(v);
}

pipeline::PipelineConfig effective_config(const ExtractFlags& f) {
  pipeline::PipelineConfig cfg = f.config_path.empty() ? pipeline::PipelineConfig{} : config::load_config(f.config_path);
  if (f.lower) cfg.band.lower = to_byte(*f.lower, "--lower");
  if (f.upper) cfg.band.upper = to_byte(*f.upper, "--upper");
  if (f.radius) cfg.outlier.radius = *f.radius;
  if (f.outlier_threshold) cfg.outlier.threshold = *f.outlier_threshold;
  if (f.outlier_direction) cfg.outlier.direction = filters::parse_outlier_direction(*f.outlier_direction);
  if (f.connectivity) cfg.connectivity = seg::connectivity_from_int(*f.connectivity);
  if (f.min_width) cfg.stage1_filter.min_width = *f.min_width;
  if (f.min_area) cfg.stage1_filter.min_area = *f.min_area;
  if (f.ratio_threshold) {
    cfg.stage1_filter.ratio_threshold = *f.ratio_threshold;
    cfg.stage2_filter.ratio_threshold = *f.ratio_threshold;
  }
  if (f.ratio_direction) {
    const auto dir = seg::parse_ratio_direction(*f.ratio_direction);
    cfg.stage1_filter.ratio_direction = dir;
    cfg.stage2_filter.ratio_direction = dir;
  }
  if (f.spectrum_k) cfg.spectrum_k = *f.spectrum_k;
  if (f.polarity) cfg.polarity = pipeline::parse_polarity(*f.polarity);
  cfg.validate();
  return cfg;
}

void ensure_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) throw Error(dir.string() + ": cannot create output directory");
}

// mask.png, overlay.png, regions.csv and result.json for one image.
void write_extraction(const ColorRaster& img, const pipeline::ExtractionResult& result, const fs::path& dir) {
  ensure_dir(dir);
  save_mask(result.open_mask, dir / "mask.png");
  save_color(report::render_overlay(img, result.open_mask), dir / "overlay.png");
  report::write_region_csv(result.regions, dir / "regions.csv");
  report::write_json(report::result_json(result), dir / "result.json");
}

int run_extract(const ExtractFlags& flags, std::ostream& out, std::ostream& err) {
  const pipeline::PipelineConfig cfg = effective_config(flags);
  if (flags.print_config) {
    out << config::to_json(cfg).dump(2) << '\n';
    if (flags.input.empty()) return 0;
  }
  if (flags.input.empty()) throw Error("extract: --input is required");

  const ColorRaster img = load_color(flags.input);
  const auto result = pipeline::extract(img, cfg);
  write_extraction(img, result, flags.out_dir);
  for (const auto& w : result.warnings) err << "warning: " << w << '\n';
  out << "extracted " << result.regions.size() << " region(s), " << count(result.open_mask)
      << " open pixel(s) -> " << flags.out_dir << '\n';
  return 0;
}

int run_change(const ChangeFlags& flags, std::ostream& out) {
  change::DatedMask before{{Date::parse(flags.before_date), flags.before}, load_mask(flags.before)};
  change::DatedMask after{{Date::parse(flags.after_date), flags.after}, load_mask(flags.after)};
  if (flags.min_blob < 0) throw Error("--min-blob must be >= 0");
  const auto cm = change::diff_masks(before, after, flags.min_blob);
  const auto summary = change::summarize(cm);

  const fs::path dir = flags.out_dir;
  ensure_dir(dir);
  const ColorRaster canvas(before.mask.width(), before.mask.height(), Rgb{0, 0, 0});
  save_color(report::render_change(cm, canvas, 1.0), dir / "change.png");
  const std::map<Date, std::int64_t> totals{
      {before.meta.acquisition_date, static_cast<std::int64_t>(count(before.mask))},
      {after.meta.acquisition_date, static_cast<std::int64_t>(count(after.mask))}};
  report::write_summary_json(totals, {summary}, dir / "summary.json");
  out << "change " << summary.earlier.iso() << " -> " << summary.later.iso() << ": gained " << summary.gained_area
      << ", lost " << summary.lost_area << ", unchanged " << summary.unchanged_area << '\n';
  return 0;
}

struct SeriesInput {
  Date date;
  fs::path path;
};

SeriesInput parse_series_input(const std::string& spec) {
  const auto eq = spec.find('=');
  if (eq == std::string::npos || eq == 0 || eq + 1 == spec.size()) {
    throw Error("--inputs expects DATE=PATH, got '" + spec + "'");
  }
  return {Date::parse(spec.substr(0, eq)), spec.substr(eq + 1)};
}

int run_series(const SeriesFlags& flags, std::ostream& out) {
  const pipeline::PipelineConfig cfg =
      flags.config_path.empty() ? pipeline::PipelineConfig{} : config::load_config(flags.config_path);

  std::vector<SeriesInput> inputs;
  for (const auto& s : flags.inputs) inputs.push_back(parse_series_input(s));
  std::sort(inputs.begin(), inputs.end(), [](const auto& a, const auto& b) { return a.date < b.date; });
  for (std::size_t i = 1; i < inputs.size(); ++i) {
    if (inputs[i].date == inputs[i - 1].date) throw Error("series: duplicate date " + inputs[i].date.iso());
  }

  // Extraction is pure, so dates run concurrently and join before differencing.
  std::vector<std::future<std::pair<ColorRaster, pipeline::ExtractionResult>>> jobs;
  for (const auto& in : inputs) {
    jobs.push_back(std::async(std::launch::async, [path = in.path, &cfg] {
      ColorRaster img = load_color(path);
      auto result = pipeline::extract(img, cfg);
      return std::make_pair(std::move(img), std::move(result));
    }));
  }
  std::vector<std::pair<ColorRaster, pipeline::ExtractionResult>> done;
  for (auto& job : jobs) done.push_back(job.get());

  const fs::path dir = flags.out_dir;
  ensure_dir(dir);
  std::vector<change::DatedMask> masks;
  std::map<Date, std::int64_t> totals;
  std::map<Date, const ColorRaster*> images;
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    const auto& [img, result] = done[i];
    write_extraction(img, result, dir / inputs[i].date.iso());
    masks.push_back({{inputs[i].date, inputs[i].path.string()}, result.open_mask});
    totals[inputs[i].date] = static_cast<std::int64_t>(count(result.open_mask));
    images[inputs[i].date] = &img;
  }

  const auto maps = change::change_series(masks);
  std::vector<change::ChangeSummary> summaries;
  for (const auto& cm : maps) {
    require_same_shape(*images[cm.later], cm.gained, "series");
    const std::string name = "change_" + cm.earlier.iso() + "_" + cm.later.iso() + ".png";
    save_color(report::render_change(cm, *images[cm.later]), dir / name);
    summaries.push_back(change::summarize(cm));
  }
  report::write_summary_json(totals, summaries, dir / "summary.json");
  out << "series: " << inputs.size() << " date(s), " << maps.size() << " change map(s) -> " << dir.string() << '\n';
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Open-space extraction and change detection for urban raster imagery", "openspace"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string("openspace 0.1.0 (kernels: ") +
                                        std::string(kernels::backend_name(kernels::active_backend())) + ")");

  ExtractFlags ex;
  auto* extract = app.add_subcommand("extract", "Extract open space from one image");
  extract->add_option("--input", ex.input, "Input image (PNG, PGM or PPM)");
  extract->add_option("--config", ex.config_path, "JSON configuration file")->check(CLI::ExistingFile);
  extract->add_option("--out", ex.out_dir, "Output directory")->capture_default_str();
  extract->add_option("--lower", ex.lower, "Band threshold lower bound (0-255)");
  extract->add_option("--upper", ex.upper, "Band threshold upper bound (0-255)");
  extract->add_option("--radius", ex.radius, "Outlier removal radius in pixels");
  extract->add_option("--outlier-threshold", ex.outlier_threshold, "Outlier removal threshold");
  extract->add_option("--outlier-direction", ex.outlier_direction, "bright|dark|both");
  extract->add_option("--connectivity", ex.connectivity, "Region connectivity, 4 or 8");
  extract->add_option("--min-width", ex.min_width, "Stage-one minimum region width");
  extract->add_option("--min-area", ex.min_area, "Stage-one minimum region area");
  extract->add_option("--ratio-threshold", ex.ratio_threshold, "Central-pixel ratio threshold");
  extract->add_option("--ratio-direction", ex.ratio_direction, "atleast|atmost");
  extract->add_option("--spectrum-k", ex.spectrum_k, "Stage-two spectrum acceptance in standard deviations");
  extract->add_option("--polarity", ex.polarity, "Open space is the band or its complement (band|complement)");
  extract->add_flag("--print-config", ex.print_config, "Print the effective configuration as JSON");

  ChangeFlags ch;
  auto* change_cmd = app.add_subcommand("change", "Compare two dated open-space masks");
  change_cmd->add_option("--before", ch.before, "Earlier mask image")->required();
  change_cmd->add_option("--after", ch.after, "Later mask image")->required();
  change_cmd->add_option("--before-date", ch.before_date, "Earlier date, YYYY-MM-DD")->required();
  change_cmd->add_option("--after-date", ch.after_date, "Later date, YYYY-MM-DD")->required();
  change_cmd->add_option("--out", ch.out_dir, "Output directory")->capture_default_str();
  change_cmd->add_option("--min-blob", ch.min_blob, "Drop gained/lost blobs smaller than this")->capture_default_str();

  SeriesFlags se;
  auto* series = app.add_subcommand("series", "Extract several dated images and compare them");
  series->add_option("--inputs", se.inputs, "DATE=PATH, repeatable")->required();
  series->add_option("--config", se.config_path, "JSON configuration file")->check(CLI::ExistingFile);
  series->add_option("--out", se.out_dir, "Output directory")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    if (code != 0 && e.get_name() != "CallForHelp") err << app.help();
    return code;
  }

  try {
    if (*extract) return run_extract(ex, out, err);
    if (*change_cmd) return run_change(ch, out);
    if (*series) return run_series(se, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace openspace::cli
