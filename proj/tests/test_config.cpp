#include <doctest.h>

#include <fstream>
#include <string>

#include "openspace/config.hpp"
#include "support/helpers.hpp"

using namespace openspace;
using nlohmann::json;

namespace {

std::string error_of(pipeline::PipelineConfig& cfg, const json& doc) {
  try {
    config::apply_json(cfg, doc);
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_CASE("defaults serialise with the documented values") {
  const auto j = config::to_json(pipeline::PipelineConfig{});
  CHECK(j["band"]["lower"] == 0);
  CHECK(j["band"]["upper"] == 48);
  CHECK(j["outlier"]["radius"] == 10.0);
  CHECK(j["outlier"]["threshold"] == 2.0);
  CHECK(j["outlier"]["direction"] == "bright");
  CHECK(j["connectivity"] == 8);
  CHECK(j["polarity"] == "complement");
  CHECK(j["stage2_filter"]["min_width"] == 0.0);
  CHECK(j["stage1_filter"]["ratio_direction"] == "atmost");
}

TEST_CASE("to_json and apply_json round-trip") {
  pipeline::PipelineConfig cfg;
  cfg.band = {3, 99};
  cfg.outlier.direction = filters::OutlierDirection::Both;
  cfg.polarity = pipeline::Polarity::Band;
  cfg.connectivity = seg::Connectivity::Four;
  cfg.stage2_filter.min_area = 77;
  cfg.stages.sobel = false;
  cfg.spectrum_k = 1.25;
  pipeline::PipelineConfig back;
  config::apply_json(back, config::to_json(cfg));
  CHECK(config::to_json(back) == config::to_json(cfg));
}

TEST_CASE("partial documents override only their keys") {
  pipeline::PipelineConfig cfg;
  config::apply_json(cfg, json::parse(R"({"band": {"upper": 60}, "spectrum_k": 3})"));
  CHECK(cfg.band.lower == 0);
  CHECK(cfg.band.upper == 60);
  CHECK(cfg.spectrum_k == 3.0);
  CHECK(cfg.outlier.radius == 10.0);
}

TEST_CASE("bad documents name the offending key and change nothing") {
  pipeline::PipelineConfig cfg;
  const auto before = config::to_json(cfg);
  CHECK(error_of(cfg, json::parse(R"({"band": {"uper": 3}})")).find("band.uper") != std::string::npos);
  CHECK(error_of(cfg, json::parse(R"({"outlier": {"radius": "ten"}})")).find("outlier.radius") != std::string::npos);
  CHECK(error_of(cfg, json::parse(R"({"band": {"lower": 300}})")).find("band.lower") != std::string::npos);
  CHECK(error_of(cfg, json::parse(R"({"band": {"lower": 90, "upper": 10}})")).find("band") != std::string::npos);
  CHECK(error_of(cfg, json::parse(R"({"connectivity": 6})")).find("connectivity") != std::string::npos);
  CHECK(error_of(cfg, json::parse("[1, 2]")) != "");
  CHECK(config::to_json(cfg) == before);
}

TEST_CASE("config files") {
  testing::TempDir dir;
  std::ofstream(dir / "c.json") << R"({"polarity": "band", "outlier": {"direction": "dark"}})";
  const auto cfg = config::load_config(dir / "c.json");
  CHECK(cfg.polarity == pipeline::Polarity::Band);
  CHECK(cfg.outlier.direction == filters::OutlierDirection::Dark);

  std::ofstream(dir / "broken.json") << "{ not json";
  CHECK_THROWS_AS(config::load_config(dir / "broken.json"), Error);
  CHECK_THROWS_AS(config::load_config(dir / "absent.json"), Error);
}
