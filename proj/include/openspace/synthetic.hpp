#pragma once

#include <cstdint>
#include <vector>

#include "openspace/raster.hpp"

namespace openspace::synthetic {

struct Rect {
  int x = 0;
  int y = 0;
  int width = 0;
  int height = 0;
};

/// Layout of a generated urban scene. Everything not covered by a feature
/// is high-contrast clutter.
struct SceneSpec {
  int width = 256;
  int height = 256;
  std::uint32_t seed = 1;
  Rgb open_color{190, 170, 130};
  int open_noise = 3;  // +/- uniform jitter on smooth surfaces
  // Dark kerb drawn around every open region; 0 disables it.
  int curb_width = 2;
  Rgb curb_color{20, 20, 25};
  std::vector<Rect> open_regions;
  std::vector<Rect> buildings;
  std::vector<Rect> trees;
  std::vector<Rect> roads;
};

struct Scene {
  ColorRaster image;
  BinaryMask open_truth;  // union of open_regions
};

Scene render(const SceneSpec& spec);

/// 256x256 scene: a 90x90 open field, building blocks, two tree stands, a
/// 3-pixel road and an 18x18 patch of open ground too narrow for stage one.
SceneSpec urban_scene(std::uint32_t seed = 1);
/// Rectangle of the small open patch in urban_scene.
Rect urban_scene_patch();
/// Rectangle of the large open field in urban_scene.
Rect urban_scene_field();
/// Rectangle of the road in urban_scene.
Rect urban_scene_road();

/// urban_scene variant whose open field has the given side length; same
/// clutter for every side, so a series of them is co-registered.
SceneSpec dated_scene(int field_side, std::uint32_t seed = 7);

}  // namespace openspace::synthetic
