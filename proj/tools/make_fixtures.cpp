// Writes the synthetic fixture scenes used by the demos and tests.
#include <CLI11.hpp>

#include <filesystem>
#include <iostream>

#include "openspace/image_io.hpp"
#include "openspace/synthetic.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Generate synthetic open-space fixtures", "make_fixtures"};
  std::string out_dir = "fixtures";
  app.add_option("--out", out_dir, "Output directory")->capture_default_str();
  CLI11_PARSE(app, argc, argv);

  namespace fs = std::filesystem;
  using namespace openspace;
  fs::create_directories(out_dir);
  const fs::path dir = out_dir;

  const auto scene = synthetic::render(synthetic::urban_scene());
  save_color(scene.image, dir / "urban.png");
  save_mask(scene.open_truth, dir / "urban_truth.png");

  const std::pair<const char*, int> dated[] = {{"2003-02-23", 100}, {"2006-02-18", 90}, {"2008-01-11", 78}};
  for (const auto& [date, side] : dated) {
    save_color(synthetic::render(synthetic::dated_scene(side)).image, dir / (std::string("scene_") + date + ".png"));
  }
  std::cout << "fixtures written to " << dir.string() << '\n';
  return 0;
}
