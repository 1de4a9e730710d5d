#include "openspace/config.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <string>

namespace openspace::config {

using nlohmann::json;
using nlohmann::ordered_json;
using pipeline::PipelineConfig;

namespace {

ordered_json filter_json(const seg::RegionFilterConfig& f) {
  ordered_json j;
  j["min_area"] = f.min_area;
  j["min_width"] = f.min_width;
  j["ratio_threshold"] = f.ratio_threshold;
  j["ratio_direction"] = std::string(seg::to_string(f.ratio_direction));
  j["max_vegetation_fraction"] = f.max_vegetation_fraction;
  j["max_texture_fraction"] = f.max_texture_fraction;
  return j;
}

// Walks one JSON object, dispatching each key to its handler; anything
// unhandled is reported with its full path.
class ObjectReader {
 public:
  ObjectReader(const json& doc, std::string path) : doc_(doc), path_(std::move(path)) {
    if (!doc_.is_object()) throw Error("config: '" + display() + "' must be an object");
  }

  ObjectReader& on(const std::string& key, const std::function<void(const json&, const std::string&)>& handler) {
    handlers_[key] = handler;
    return *this;
  }

  void run() const {
    for (const auto& [key, value] : doc_.items()) {
      const auto it = handlers_.find(key);
      const std::string where = path_.empty() ? key : path_ + "." + key;
      if (it == handlers_.end()) throw Error("config: unknown key '" + where + "'");
      try {
        it->second(value, where);
      } catch (const json::exception& e) {
        throw Error("config: bad value for '" + where + "': " + e.what());
      } catch (const Error& e) {
        const std::string msg = e.what();
        if (msg.rfind("config:", 0) == 0) throw;
        throw Error("config: bad value for '" + where + "': " + msg);
      }
    }
  }

 private:
  std::string display() const { return path_.empty() ? "<root>" : path_; }

  const json& doc_;
  std::string path_;
  std::map<std::string, std::function<void(const json&, const std::string&)>> handlers_;
};

double number(const json& v) {
  if (!v.is_number()) throw Error("expected a number");
  return v.get<double>();
}

std::int64_t integer(const json& v) {
  if (!v.is_number_integer()) throw Error("expected an integer");
  return v.get<std::int64_t>();
}

bool boolean(const json& v) {
  if (!v.is_boolean()) throw Error("expected true or false");
  return v.get<bool>();
}

std::string text(const json& v) {
  if (!v.is_string()) throw Error("expected a string");
  return v.get<std::string>();
}

std::uint8_t byte(const json& v) {
  const std::int64_t n = integer(v);
  if (n < 0 || n > 255) throw Error("expected an integer in 0..255");
  return static_cast<std::uint8_t>(n);
}

void read_filter(seg::RegionFilterConfig& f, const json& doc, const std::string& path) {
  ObjectReader(doc, path)
      .on("min_area", [&](const json& v, auto&) { f.min_area = integer(v); })
      .on("min_width", [&](const json& v, auto&) { f.min_width = number(v); })
      .on("ratio_threshold", [&](const json& v, auto&) { f.ratio_threshold = number(v); })
      .on("ratio_direction", [&](const json& v, auto&) { f.ratio_direction = seg::parse_ratio_direction(text(v)); })
      .on("max_vegetation_fraction", [&](const json& v, auto&) { f.max_vegetation_fraction = number(v); })
      .on("max_texture_fraction", [&](const json& v, auto&) { f.max_texture_fraction = number(v); })
      .run();
}

}  // namespace

ordered_json to_json(const PipelineConfig& cfg) {
  ordered_json j;
  j["canny"] = {{"sigma", cfg.canny.gaussian_sigma},
                {"low", cfg.canny.low_threshold},
                {"high", cfg.canny.high_threshold}};
  j["outlier"] = {{"radius", cfg.outlier.radius},
                  {"threshold", cfg.outlier.threshold},
                  {"direction", std::string(filters::to_string(cfg.outlier.direction))}};
  j["band"] = {{"lower", cfg.band.lower}, {"upper", cfg.band.upper}};
  j["stages"] = {{"canny", cfg.stages.canny},
                 {"invert", cfg.stages.invert},
                 {"sobel", cfg.stages.sobel},
                 {"outlier", cfg.stages.outlier}};
  j["polarity"] = std::string(pipeline::to_string(cfg.polarity));
  j["connectivity"] = seg::to_int(cfg.connectivity);
  j["vegetation"] = {{"exg_threshold", cfg.vegetation_exg_threshold}};
  j["texture"] = {{"window", cfg.texture_window}, {"var_threshold", cfg.texture_var_threshold}};
  j["stage1_filter"] = filter_json(cfg.stage1_filter);
  j["stage2_filter"] = filter_json(cfg.stage2_filter);
  j["spectrum_k"] = cfg.spectrum_k;
  return j;
}

void apply_json(PipelineConfig& cfg, const json& doc) {
  PipelineConfig next = cfg;
  ObjectReader(doc, "")
      .on("canny",
          [&](const json& v, const std::string& p) {
            ObjectReader(v, p)
                .on("sigma", [&](const json& x, auto&) { next.canny.gaussian_sigma = number(x); })
                .on("low", [&](const json& x, auto&) { next.canny.low_threshold = number(x); })
                .on("high", [&](const json& x, auto&) { next.canny.high_threshold = number(x); })
                .run();
          })
      .on("outlier",
          [&](const json& v, const std::string& p) {
            ObjectReader(v, p)
                .on("radius", [&](const json& x, auto&) { next.outlier.radius = number(x); })
                .on("threshold", [&](const json& x, auto&) { next.outlier.threshold = number(x); })
                .on("direction",
                    [&](const json& x, auto&) { next.outlier.direction = filters::parse_outlier_direction(text(x)); })
                .run();
          })
      .on("band",
          [&](const json& v, const std::string& p) {
            ObjectReader(v, p)
                .on("lower", [&](const json& x, auto&) { next.band.lower = byte(x); })
                .on("upper", [&](const json& x, auto&) { next.band.upper = byte(x); })
                .run();
          })
      .on("stages",
          [&](const json& v, const std::string& p) {
            ObjectReader(v, p)
                .on("canny", [&](const json& x, auto&) { next.stages.canny = boolean(x); })
                .on("invert", [&](const json& x, auto&) { next.stages.invert = boolean(x); })
                .on("sobel", [&](const json& x, auto&) { next.stages.sobel = boolean(x); })
                .on("outlier", [&](const json& x, auto&) { next.stages.outlier = boolean(x); })
                .run();
          })
      .on("polarity", [&](const json& v, auto&) { next.polarity = pipeline::parse_polarity(text(v)); })
      .on("connectivity",
          [&](const json& v, auto&) { next.connectivity = seg::connectivity_from_int(static_cast<int>(integer(v))); })
      .on("vegetation",
          [&](const json& v, const std::string& p) {
            ObjectReader(v, p)
                .on("exg_threshold",
                    [&](const json& x, auto&) { next.vegetation_exg_threshold = static_cast<int>(integer(x)); })
                .run();
          })
      .on("texture",
          [&](const json& v, const std::string& p) {
            ObjectReader(v, p)
                .on("window", [&](const json& x, auto&) { next.texture_window = static_cast<int>(integer(x)); })
                .on("var_threshold", [&](const json& x, auto&) { next.texture_var_threshold = number(x); })
                .run();
          })
      .on("stage1_filter", [&](const json& v, const std::string& p) { read_filter(next.stage1_filter, v, p); })
      .on("stage2_filter", [&](const json& v, const std::string& p) { read_filter(next.stage2_filter, v, p); })
      .on("spectrum_k", [&](const json& v, auto&) { next.spectrum_k = number(v); })
      .run();
  try {
    next.validate();
  } catch (const Error& e) {
    throw Error(std::string("config: ") + e.what());
  }
  cfg = next;
}

PipelineConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(path.string() + ": cannot open config file");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(path.string() + ": invalid JSON: " + e.what());
  }
  PipelineConfig cfg;
  try {
    apply_json(cfg, doc);
  } catch (const Error& e) {
    throw Error(path.string() + ": " + e.what());
  }
  return cfg;
}

}  // namespace openspace::config
