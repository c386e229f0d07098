#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

namespace rectcount {

// Axis-aligned rectangle with integer corners, [x0,x1] x [y0,y1].
struct Rect {
  int x0, y0, x1, y1;
  friend auto operator<=>(const Rect&, const Rect&) = default;
};

// A partition of the p x q integer grid into axis-aligned rectangles: a
// concrete realization of a rectangulation. Tiles are pairwise
// interior-disjoint and cover [0,p] x [0,q] exactly.
struct GridTiling {
  int width = 1;   // p
  int height = 1;  // q
  std::vector<Rect> tiles;
};

inline bool is_valid(const GridTiling& t) {
  if (t.width < 1 || t.height < 1 || t.tiles.empty()) return false;
  std::vector<char> covered(static_cast<size_t>(t.width) *
                            static_cast<size_t>(t.height), 0);
  for (const Rect& tile : t.tiles) {
    if (!(0 <= tile.x0 && tile.x0 < tile.x1 && tile.x1 <= t.width)) return false;
    if (!(0 <= tile.y0 && tile.y0 < tile.y1 && tile.y1 <= t.height)) return false;
    for (int y = tile.y0; y < tile.y1; ++y)
      for (int x = tile.x0; x < tile.x1; ++x) {
        char& cell = covered[static_cast<size_t>(y) * t.width + x];
        if (cell) return false;  // overlap
        cell = 1;
      }
  }
  return std::all_of(covered.begin(), covered.end(),
                     [](char c) { return c == 1; });
}

// Enumerates every partition of the p x q grid into exactly m rectangles,
// each exactly once. The recursion always places a tile whose lower-left
// corner is the first uncovered cell in row-major scan order; the tile then
// extends right and up. Any partition decomposes uniquely this way, so there
// are no duplicates. Grid sizes stay small (p, q <= m <= 7), which lets the
// cover state live in one 64-bit mask.
inline void enumerate_grid_tilings(
    int p, int q, int m, const std::function<void(const GridTiling&)>& yield) {
  if (p < 1 || q < 1 || m < 1)
    throw std::invalid_argument("enumerate_grid_tilings: p, q, m must be >= 1");
  if (p > 8 || q > 8)
    throw std::invalid_argument("enumerate_grid_tilings: grid larger than 8x8");

  const int cells = p * q;
  const uint64_t full = (cells == 64) ? ~uint64_t{0} : ((uint64_t{1} << cells) - 1);
  auto bit = [p](int x, int y) { return uint64_t{1} << (y * p + x); };

  GridTiling current;
  current.width = p;
  current.height = q;
  current.tiles.reserve(static_cast<size_t>(m));

  // row masks per tile footprint are cheap to rebuild; recursion depth <= m
  std::function<void(uint64_t, int)> place = [&](uint64_t covered, int placed) {
    if (covered == full) {
      if (placed == m) yield(current);
      return;
    }
    if (placed == m) return;
    const int free_cells = cells - std::popcount(covered);
    if (free_cells < m - placed) return;  // a tile covers at least one cell

    const int first = std::countr_zero(~covered & full);
    const int x0 = first % p;
    const int y0 = first / p;

    int max_x1 = x0;
    while (max_x1 < p && !(covered & bit(max_x1, y0))) ++max_x1;

    for (int x1 = x0 + 1; x1 <= max_x1; ++x1) {
      uint64_t row = 0;
      for (int x = x0; x < x1; ++x) row |= bit(x, y0);
      uint64_t footprint = 0;
      for (int y1 = y0 + 1; y1 <= q; ++y1) {
        const uint64_t next_row = row << (p * (y1 - 1 - y0));
        if (covered & next_row) break;  // row y1-1 not fully free
        footprint |= next_row;
        current.tiles.push_back({x0, y0, x1, y1});
        place(covered | footprint, placed + 1);
        current.tiles.pop_back();
      }
    }
  };
  place(0, 0);
}

// The eight symmetries of the square applied to a grid tiling; entries with
// swapped width/height correspond to the diagonal reflections and quarter
// turns. Tiles are re-sorted so images are canonical as tile lists.
inline std::array<GridTiling, 8> d8_images(const GridTiling& t) {
  const int p = t.width, q = t.height;
  using Map = std::function<std::pair<int, int>(int, int)>;
  const std::array<std::pair<Map, bool>, 8> maps = {{
      {[=](int x, int y) { return std::pair{x, y}; }, false},
      {[=](int x, int y) { return std::pair{p - x, y}; }, false},
      {[=](int x, int y) { return std::pair{x, q - y}; }, false},
      {[=](int x, int y) { return std::pair{p - x, q - y}; }, false},
      {[=](int x, int y) { return std::pair{y, x}; }, true},
      {[=](int x, int y) { return std::pair{q - y, p - x}; }, true},
      {[=](int x, int y) { return std::pair{q - y, x}; }, true},
      {[=](int x, int y) { return std::pair{y, p - x}; }, true},
  }};
  std::array<GridTiling, 8> images;
  for (size_t i = 0; i < maps.size(); ++i) {
    const auto& [f, swaps] = maps[i];
    GridTiling& img = images[i];
    img.width = swaps ? q : p;
    img.height = swaps ? p : q;
    img.tiles.reserve(t.tiles.size());
    for (const Rect& tile : t.tiles) {
      auto [ax, ay] = f(tile.x0, tile.y0);
      auto [bx, by] = f(tile.x1, tile.y1);
      img.tiles.push_back({std::min(ax, bx), std::min(ay, by),
                           std::max(ax, bx), std::max(ay, by)});
    }
    std::sort(img.tiles.begin(), img.tiles.end());
  }
  return images;
}

}  // namespace rectcount
