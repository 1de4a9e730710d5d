#include "openspace/synthetic.hpp"

#include <algorithm>
#include <random>

namespace openspace::synthetic {

namespace {

// Raw engine output only; distributions are implementation-defined and
// would make fixtures differ between standard libraries.
class Noise {
 public:
  explicit Noise(std::uint32_t seed) : engine_(seed) {}
  int uniform(int lo, int hi) { return lo + static_cast<int>(engine_() % static_cast<std::uint32_t>(hi - lo + 1)); }

 private:
  std::mt19937 engine_;
};

std::uint8_t clamp_byte(int v) { return static_cast<std::uint8_t>(std::clamp(v, 0, 255)); }

template <class F>
void fill(ColorRaster& img, const Rect& r, F&& pixel) {
  for (int y = std::max(0, r.y); y < std::min(img.height(), r.y + r.height); ++y) {
    for (int x = std::max(0, r.x); x < std::min(img.width(), r.x + r.width); ++x) img(x, y) = pixel(x, y);
  }
}

}  // namespace

Scene render(const SceneSpec& spec) {
  Noise noise(spec.seed);
  ColorRaster img(spec.width, spec.height);

  // Clutter: 2x2 cells of random dark or bright gray with a slight tint.
  // Nothing lands near the open colour, so field borders stay crisp.
  for (int y = 0; y < spec.height; y += 2) {
    for (int x = 0; x < spec.width; x += 2) {
      const int v = noise.uniform(0, 1) ? noise.uniform(20, 110) : noise.uniform(225, 250);
      const Rgb c{clamp_byte(v + noise.uniform(-10, 10)), clamp_byte(v), clamp_byte(v + noise.uniform(-10, 10))};
      fill(img, {x, y, 2, 2}, [&](int, int) { return c; });
    }
  }
  for (const auto& t : spec.trees) {
    fill(img, t, [&](int, int) {
      return Rgb{clamp_byte(noise.uniform(10, 90)), clamp_byte(noise.uniform(60, 220)), clamp_byte(noise.uniform(10, 80))};
    });
  }
  for (std::size_t i = 0; i < spec.buildings.size(); ++i) {
    static constexpr Rgb kRoofs[] = {{235, 235, 230}, {70, 72, 80}, {150, 60, 50}, {110, 110, 120}};
    const Rgb roof = kRoofs[i % 4];
    fill(img, spec.buildings[i], [&](int, int) { return roof; });
  }
  for (const auto& r : spec.roads) {
    fill(img, r, [&](int, int) { return Rgb{125, 125, 125}; });
  }
  const auto smooth = [&](int, int) {
    const int j = spec.open_noise > 0 ? noise.uniform(-spec.open_noise, spec.open_noise) : 0;
    return Rgb{clamp_byte(spec.open_color.r + j), clamp_byte(spec.open_color.g + j), clamp_byte(spec.open_color.b + j)};
  };
  for (const auto& o : spec.open_regions) {
    const int m = spec.curb_width;
    fill(img, {o.x - m, o.y - m, o.width + 2 * m, o.height + 2 * m}, [&](int, int) { return spec.curb_color; });
  }
  BinaryMask truth(spec.width, spec.height, 0);
  for (const auto& o : spec.open_regions) {
    fill(img, o, smooth);
    for (int y = std::max(0, o.y); y < std::min(spec.height, o.y + o.height); ++y) {
      for (int x = std::max(0, o.x); x < std::min(spec.width, o.x + o.width); ++x) truth(x, y) = 1;
    }
  }
  return {std::move(img), std::move(truth)};
}

Rect urban_scene_field() { return {24, 24, 90, 90}; }
Rect urban_scene_patch() { return {190, 36, 18, 18}; }
Rect urban_scene_road() { return {0, 214, 256, 3}; }

SceneSpec urban_scene(std::uint32_t seed) {
  SceneSpec s;
  s.seed = seed;
  s.open_regions = {urban_scene_field(), urban_scene_patch()};
  s.buildings = {{140, 30, 16, 12}, {136, 70, 12, 18}, {170, 100, 14, 14}, {40, 140, 18, 12}, {90, 150, 12, 16}};
  s.trees = {{130, 130, 60, 50}, {200, 150, 45, 45}};
  s.roads = {urban_scene_road()};
  return s;
}

SceneSpec dated_scene(int field_side, std::uint32_t seed) {
  SceneSpec s = urban_scene(seed);
  s.open_regions = {{24, 24, field_side, field_side}};
  return s;
}

}  // namespace openspace::synthetic
