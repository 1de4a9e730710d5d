#pragma once
// Deliberately naive reference implementations. They share nothing with the
// library beyond the raster types, so agreement means something.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <deque>
#include <vector>

#include "openspace/raster.hpp"

namespace oracle {

using openspace::BinaryMask;
using openspace::GrayRaster;
using openspace::ScalarField;

inline int at_clamped(const GrayRaster& g, int x, int y) {
  x = std::clamp(x, 0, g.width() - 1);
  y = std::clamp(y, 0, g.height() - 1);
  return g(x, y);
}

// Direct 3x3 correlation with the two Sobel kernels.
inline ScalarField sobel(const GrayRaster& g) {
  static constexpr int kx[3][3] = {{1, 0, -1}, {2, 0, -2}, {1, 0, -1}};
  static constexpr int ky[3][3] = {{1, 2, 1}, {0, 0, 0}, {-1, -2, -1}};
  ScalarField out(g.width(), g.height(), 0.0);
  for (int y = 0; y < g.height(); ++y) {
    for (int x = 0; x < g.width(); ++x) {
      double gx = 0.0;
      double gy = 0.0;
      for (int j = 0; j < 3; ++j) {
        for (int i = 0; i < 3; ++i) {
          const int v = at_clamped(g, x + i - 1, y + j - 1);
          gx += kx[j][i] * v;
          gy += ky[j][i] * v;
        }
      }
      out(x, y) = std::hypot(gx, gy);
    }
  }
  return out;
}

enum class Direction { Bright, Dark, Both };

// Median of the clamped disc, recomputed from scratch for every pixel.
inline GrayRaster outlier(const GrayRaster& g, double radius, double threshold, Direction dir) {
  GrayRaster out = g;
  const int reach = static_cast<int>(std::floor(radius));
  for (int y = 0; y < g.height(); ++y) {
    for (int x = 0; x < g.width(); ++x) {
      std::vector<int> values;
      for (int dy = -reach; dy <= reach; ++dy) {
        for (int dx = -reach; dx <= reach; ++dx) {
          if (dx * dx + dy * dy <= radius * radius) values.push_back(at_clamped(g, x + dx, y + dy));
        }
      }
      std::sort(values.begin(), values.end());
      const int median = values[(values.size() - 1) / 2];
      const int v = g(x, y);
      bool replace = false;
      if (dir == Direction::Bright) replace = v - median > threshold;
      if (dir == Direction::Dark) replace = median - v > threshold;
      if (dir == Direction::Both) replace = std::abs(v - median) > threshold;
      if (replace) out(x, y) = static_cast<std::uint8_t>(median);
    }
  }
  return out;
}

// Population variance of the clamped window, straight from the definition.
inline BinaryMask texture(const GrayRaster& g, int window, double threshold) {
  BinaryMask out(g.width(), g.height(), 0);
  const int r = window / 2;
  for (int y = 0; y < g.height(); ++y) {
    for (int x = 0; x < g.width(); ++x) {
      double mean = 0.0;
      for (int dy = -r; dy <= r; ++dy) {
        for (int dx = -r; dx <= r; ++dx) mean += at_clamped(g, x + dx, y + dy);
      }
      mean /= window * window;
      double var = 0.0;
      for (int dy = -r; dy <= r; ++dy) {
        for (int dx = -r; dx <= r; ++dx) {
          const double d = at_clamped(g, x + dx, y + dy) - mean;
          var += d * d;
        }
      }
      var /= window * window;
      out(x, y) = var > threshold ? 1 : 0;
    }
  }
  return out;
}

// Breadth-first flood fill; component ids in row-major order of first pixel.
inline std::vector<int> flood_fill(const BinaryMask& m, bool eight, int* components = nullptr) {
  const int w = m.width();
  const int h = m.height();
  std::vector<int> id(static_cast<std::size_t>(w) * h, 0);
  int next = 0;
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      if (!m(x, y) || id[static_cast<std::size_t>(y) * w + x]) continue;
      ++next;
      std::deque<std::pair<int, int>> queue{{x, y}};
      id[static_cast<std::size_t>(y) * w + x] = next;
      while (!queue.empty()) {
        const auto [cx, cy] = queue.front();
        queue.pop_front();
        for (int dy = -1; dy <= 1; ++dy) {
          for (int dx = -1; dx <= 1; ++dx) {
            if ((dx == 0 && dy == 0) || (!eight && dx != 0 && dy != 0)) continue;
            const int nx = cx + dx;
            const int ny = cy + dy;
            if (nx < 0 || ny < 0 || nx >= w || ny >= h || !m(nx, ny)) continue;
            int& slot = id[static_cast<std::size_t>(ny) * w + nx];
            if (slot) continue;
            slot = next;
            queue.push_back({nx, ny});
          }
        }
      }
    }
  }
  if (components) *components = next;
  return id;
}

inline bool connected8(const BinaryMask& m) {
  int n = 0;
  flood_fill(m, true, &n);
  return n <= 1;
}

// Number of 4-connected background components that do not touch the frame.
inline int holes(const BinaryMask& m) {
  int n = 0;
  const auto id = flood_fill(openspace::mask_not(m), false, &n);
  std::vector<bool> touches(static_cast<std::size_t>(n) + 1, false);
  for (int y = 0; y < m.height(); ++y) {
    for (int x = 0; x < m.width(); ++x) {
      if (x == 0 || y == 0 || x + 1 == m.width() || y + 1 == m.height()) {
        touches[static_cast<std::size_t>(id[static_cast<std::size_t>(y) * m.width() + x])] = true;
      }
    }
  }
  int count = 0;
  for (int k = 1; k <= n; ++k) count += touches[static_cast<std::size_t>(k)] ? 0 : 1;
  return count;
}

// Chessboard distance to the nearest clear pixel, frame counted as clear.
inline std::vector<int> chessboard(const BinaryMask& m) {
  const int w = m.width();
  const int h = m.height();
  std::vector<int> d(static_cast<std::size_t>(w) * h, 0);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      if (!m(x, y)) continue;
      int best = std::min({x + 1, y + 1, w - x, h - y});
      for (int v = 0; v < h; ++v) {
        for (int u = 0; u < w; ++u) {
          if (!m(u, v)) best = std::min(best, std::max(std::abs(u - x), std::abs(v - y)));
        }
      }
      d[static_cast<std::size_t>(y) * w + x] = best;
    }
  }
  return d;
}

// Topology check by flood fill inside the 3x3 block: set neighbours form
// one 8-connected group, and the clear 4-neighbours reach each other
// through clear pixels of the block with 4-steps.
inline bool simple_point(const BinaryMask& m, int x, int y) {
  std::array<std::array<int, 3>, 3> b{};
  for (int j = 0; j < 3; ++j) {
    for (int i = 0; i < 3; ++i) {
      const int u = x + i - 1;
      const int v = y + j - 1;
      b[j][i] = m.contains(u, v) ? m(u, v) : 0;
    }
  }
  b[1][1] = 0;
  const auto groups = [&](int want, bool eight, bool only_edge_seeds) {
    std::array<std::array<int, 3>, 3> seen{};
    int n = 0;
    for (int j = 0; j < 3; ++j) {
      for (int i = 0; i < 3; ++i) {
        if ((i == 1 && j == 1) || b[j][i] != want || seen[j][i]) continue;
        if (only_edge_seeds && i != 1 && j != 1) continue;
        ++n;
        std::vector<std::pair<int, int>> stack{{i, j}};
        seen[j][i] = 1;
        while (!stack.empty()) {
          const auto [ci, cj] = stack.back();
          stack.pop_back();
          for (int dj = -1; dj <= 1; ++dj) {
            for (int di = -1; di <= 1; ++di) {
              if ((di == 0 && dj == 0) || (!eight && di != 0 && dj != 0)) continue;
              const int ni = ci + di;
              const int nj = cj + dj;
              if (ni < 0 || nj < 0 || ni > 2 || nj > 2 || (ni == 1 && nj == 1)) continue;
              if (b[nj][ni] != want || seen[nj][ni]) continue;
              seen[nj][ni] = 1;
              stack.push_back({ni, nj});
            }
          }
        }
      }
    }
    return n;
  };
  return groups(1, true, false) == 1 && groups(0, false, true) == 1;
}

// Reference thinning for hole-free shapes: anchors are distance maxima at
// least half as deep as the deepest pixel; the rest is peeled level by
// level in row-major order while simple, each level to a fixpoint.
inline BinaryMask thin(const BinaryMask& region) {
  const int w = region.width();
  const auto dist = chessboard(region);
  const int deepest = *std::max_element(dist.begin(), dist.end());
  BinaryMask bits = region;
  std::vector<std::pair<int, int>> pending;
  for (int level = 1; level <= deepest; ++level) {
    for (int y = 0; y < region.height(); ++y) {
      for (int x = 0; x < w; ++x) {
        const int d = dist[static_cast<std::size_t>(y) * w + x];
        if (!region(x, y) || d != level) continue;
        bool deeper = false;
        for (int dy = -1; dy <= 1; ++dy) {
          for (int dx = -1; dx <= 1; ++dx) {
            if (region.contains(x + dx, y + dy) && dist[static_cast<std::size_t>(y + dy) * w + x + dx] > d) {
              deeper = true;
            }
          }
        }
        if (deeper || 2 * d < deepest) pending.push_back({x, y});
      }
    }
    std::sort(pending.begin(), pending.end(), [](auto a, auto b) { return std::pair(a.second, a.first) < std::pair(b.second, b.first); });
    bool changed = true;
    while (changed) {
      changed = false;
      std::vector<std::pair<int, int>> kept;
      for (const auto& [x, y] : pending) {
        if (simple_point(bits, x, y)) {
          bits(x, y) = 0;
          changed = true;
        } else {
          kept.push_back({x, y});
        }
      }
      pending = kept;
    }
  }
  return bits;
}

}  // namespace oracle
