#include <doctest.h>

#include <fstream>

#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "openspace/cli.hpp"
#include "openspace/image_io.hpp"
#include "openspace/synthetic.hpp"
#include "support/helpers.hpp"

using namespace openspace;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code = 0;
  std::string out;
  std::string err;
};

Outcome run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "openspace");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json printed_config(const std::vector<std::string>& extra) {
  std::vector<std::string> args = {"extract", "--print-config"};
  args.insert(args.end(), extra.begin(), extra.end());
  const Outcome o = run_cli(args);
  REQUIRE(o.code == 0);
  return nlohmann::json::parse(o.out);
}

const char* const kDates[] = {"2003-02-23", "2006-02-18", "2008-01-11"};
const int kSides[] = {100, 90, 78};

void write_dated_fixtures(const testing::TempDir& dir) {
  for (int i = 0; i < 3; ++i) {
    save_color(synthetic::render(synthetic::dated_scene(kSides[i])).image, dir / (std::string(kDates[i]) + ".png"));
  }
  std::ofstream(dir / "band.json") << R"({"polarity": "band"})";
}

std::vector<std::string> series_args(const testing::TempDir& dir, const std::string& out) {
  std::vector<std::string> args = {"series"};
  for (const char* d : kDates) {
    args.push_back("--inputs");
    args.push_back(std::string(d) + "=" + (dir / (std::string(d) + ".png")).string());
  }
  args.insert(args.end(), {"--config", (dir / "band.json").string(), "--out", (dir / out).string()});
  return args;
}

}  // namespace

TEST_CASE("print-config reports the defaults") {
  const auto j = printed_config({});
  CHECK(j["band"]["lower"] == 0);
  CHECK(j["band"]["upper"] == 48);
  CHECK(j["outlier"]["radius"] == 10);
  CHECK(j["outlier"]["threshold"] == 2);
  CHECK(j["outlier"]["direction"] == "bright");
  CHECK(j["connectivity"] == 8);
}

TEST_CASE("flags override the config file, which overrides defaults") {
  testing::TempDir dir;
  std::ofstream(dir / "c.json") << R"({"band": {"upper": 60, "lower": 5}, "outlier": {"radius": 4}})";
  const std::string cfg = (dir / "c.json").string();
  const auto from_file = printed_config({"--config", cfg});
  CHECK(from_file["band"]["upper"] == 60);
  CHECK(from_file["outlier"]["radius"] == 4);
  const auto flagged = printed_config({"--config", cfg, "--upper", "70", "--min-width", "12", "--ratio-threshold",
                                       "1.5", "--outlier-direction", "both", "--polarity", "band", "--connectivity", "4"});
  CHECK(flagged["band"]["upper"] == 70);
  CHECK(flagged["band"]["lower"] == 5);
  CHECK(flagged["outlier"]["radius"] == 4);
  CHECK(flagged["outlier"]["direction"] == "both");
  CHECK(flagged["stage1_filter"]["min_width"] == 12);
  CHECK(flagged["stage2_filter"]["min_width"] == 0);
  CHECK(flagged["stage2_filter"]["ratio_threshold"] == 1.5);
  CHECK(flagged["polarity"] == "band");
  CHECK(flagged["connectivity"] == 4);
}

TEST_CASE("extract writes its four artifacts") {
  testing::TempDir dir;
  save_color(synthetic::render(synthetic::urban_scene()).image, dir / "a.png");
  const Outcome o = run_cli({"extract", "--input", (dir / "a.png").string(), "--out", (dir / "out").string(),
                             "--polarity", "band"});
  CHECK(o.code == 0);
  for (const char* name : {"mask.png", "overlay.png", "regions.csv", "result.json"}) {
    CHECK(fs::exists(dir.path() / "out" / name));
  }
  const std::string csv = testing::slurp(dir / "out/regions.csv");
  CHECK(csv.rfind("label,area,centroid_x,centroid_y\n1,", 0) == 0);
  const auto result = nlohmann::json::parse(testing::slurp(dir / "out/result.json"));
  CHECK(result["regions"].size() >= 2);
  CHECK(load_mask(dir / "out/mask.png").width() == 256);
}

TEST_CASE("extract with defaults on a uniform image warns") {
  testing::TempDir dir;
  save_color(ColorRaster(16, 16, Rgb{90, 90, 90}), dir / "u.png");
  const Outcome o = run_cli({"extract", "--input", (dir / "u.png").string(), "--out", (dir / "out").string()});
  CHECK(o.code == 0);
  CHECK(o.err.find("warning:") != std::string::npos);
  CHECK(testing::slurp(dir / "out/regions.csv") == "label,area,centroid_x,centroid_y\n");
}

TEST_CASE("usage errors") {
  const Outcome unknown = run_cli({"frobnicate"});
  CHECK(unknown.code != 0);
  CHECK(unknown.err.find("extract") != std::string::npos);

  CHECK(run_cli({}).code != 0);
  CHECK(run_cli({"extract", "--bogus"}).code != 0);
  CHECK(run_cli({"change", "--before", "x.png"}).code != 0);

  const Outcome missing = run_cli({"extract", "--input", "/nonexistent/x.png"});
  CHECK(missing.code == 1);
  CHECK(missing.err.find("file not found") != std::string::npos);

  const Outcome no_input = run_cli({"extract"});
  CHECK(no_input.code == 1);
  CHECK(no_input.err.find("--input") != std::string::npos);

  CHECK(run_cli({"extract", "--print-config", "--lower", "300"}).code == 1);
  CHECK(run_cli({"extract", "--print-config", "--outlier-direction", "sideways"}).code == 1);
  CHECK(run_cli({"series", "--inputs", "2003-02-23"}).code == 1);
}

TEST_CASE("change compares two mask files") {
  testing::TempDir dir;
  save_mask(testing::rect_mask(20, 20, 0, 0, 10, 10), dir / "e.png");
  save_mask(testing::rect_mask(20, 20, 5, 5, 10, 10), dir / "l.png");
  const Outcome o = run_cli({"change", "--before", (dir / "e.png").string(), "--after", (dir / "l.png").string(),
                             "--before-date", "2003-02-23", "--after-date", "2006-02-18", "--out",
                             (dir / "out").string()});
  REQUIRE(o.code == 0);
  CHECK(fs::exists(dir.path() / "out/change.png"));
  const auto s = nlohmann::json::parse(testing::slurp(dir / "out/summary.json"));
  REQUIRE(s["changes"].size() == 1);
  CHECK(s["changes"][0]["unchanged"] == 25);
  CHECK(s["changes"][0]["lost"] == 75);
  CHECK(s["changes"][0]["gained"] == 75);

  const Outcome reversed = run_cli({"change", "--before", (dir / "e.png").string(), "--after", (dir / "l.png").string(),
                                    "--before-date", "2006-02-18", "--after-date", "2003-02-23", "--out",
                                    (dir / "out2").string()});
  CHECK(reversed.code == 1);
}

TEST_CASE("series over three dates") {
  testing::TempDir dir;
  write_dated_fixtures(dir);
  const Outcome o = run_cli(series_args(dir, "out"));
  REQUIRE(o.code == 0);
  const fs::path out = dir.path() / "out";
  int change_pngs = 0;
  for (const auto& entry : fs::directory_iterator(out)) {
    const std::string name = entry.path().filename().string();
    if (name.rfind("change_", 0) == 0 && entry.path().extension() == ".png") ++change_pngs;
  }
  CHECK(change_pngs == 3);
  CHECK(fs::exists(out / "change_2003-02-23_2008-01-11.png"));
  for (const char* d : kDates) CHECK(fs::exists(out / d / "regions.csv"));
  const auto s = nlohmann::json::parse(testing::slurp(out / "summary.json"));
  CHECK(s["changes"].size() == 3);
  CHECK(s["dates"]["2003-02-23"].get<int>() > s["dates"]["2008-01-11"].get<int>());
}
