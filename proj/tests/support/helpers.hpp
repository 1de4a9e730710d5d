#pragma once

#include <atomic>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "openspace/raster.hpp"

namespace testing {

// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  TempDir() {
    static std::atomic<int> counter{0};
    path_ = std::filesystem::temp_directory_path() /
            ("openspace-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
    std::filesystem::remove_all(path_);
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

 private:
  std::filesystem::path path_;
};

inline std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline int uniform(std::mt19937& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<std::uint32_t>(hi - lo + 1));
}

inline openspace::GrayRaster random_gray(std::mt19937& rng, int w, int h, int lo = 0, int hi = 255) {
  openspace::GrayRaster g(w, h);
  for (auto& v : g.values()) v = static_cast<std::uint8_t>(uniform(rng, lo, hi));
  return g;
}

inline openspace::ColorRaster random_color(std::mt19937& rng, int w, int h) {
  openspace::ColorRaster c(w, h);
  for (auto& p : c.values()) {
    p = {static_cast<std::uint8_t>(rng()), static_cast<std::uint8_t>(rng()), static_cast<std::uint8_t>(rng())};
  }
  return c;
}

// Each bit set with probability percent / 100.
inline openspace::BinaryMask random_mask(std::mt19937& rng, int w, int h, int percent) {
  openspace::BinaryMask m(w, h);
  for (auto& v : m.values()) v = uniform(rng, 0, 99) < percent ? 1 : 0;
  return m;
}

inline openspace::BinaryMask rect_mask(int w, int h, int x0, int y0, int rw, int rh) {
  openspace::BinaryMask m(w, h, 0);
  for (int y = y0; y < y0 + rh; ++y) {
    for (int x = x0; x < x0 + rw; ++x) m(x, y) = 1;
  }
  return m;
}

}  // namespace testing
