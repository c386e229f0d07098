#pragma once

#include <cassert>
#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "rectcount/grid_tiling.hpp"

namespace rectcount {

// Canonical byte sequence identifying a rectangulation. Two grid tilings get
// equal encodings iff they are combinatorially equivalent: the directed
// (horizontal/vertical, orientation-preserving) 1-skeleton with the four
// corners pinned determines the equivalence class, and the encoding is a
// deterministic serialization of that skeleton.
struct SkeletonEncoding {
  std::vector<unsigned char> bytes;
  friend auto operator<=>(const SkeletonEncoding&,
                          const SkeletonEncoding&) = default;
};

inline std::string to_hex(const SkeletonEncoding& enc) {
  static const char digits[] = "0123456789abcdef";
  std::string out;
  out.reserve(enc.bytes.size() * 2);
  for (unsigned char b : enc.bytes) {
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 0xf]);
  }
  return out;
}

// Census record for one equivalence class.
//   m tiles, r edges meeting the open right side, s singular vertices,
//   k vertices and e edges of the 1-skeleton, and whether the class is fixed
//   by the full symmetry group of the square.
struct ClassStats {
  int m = 0;
  int r = 0;
  int s = 0;
  int k = 0;
  int e = 0;
  bool symmetric = false;
};

namespace detail {

// 1-skeleton of a grid tiling at unit-segment granularity. vseg[x] bit y set
// means the segment from (x,y) to (x,y+1) lies on a tile side; hseg[y] bit x
// likewise for (x,y)-(x+1,y). Vertices are exactly the tile corners.
struct Skeleton {
  int p = 0, q = 0;
  bool vertex[9][9] = {};
  uint16_t vseg[9] = {};
  uint16_t hseg[9] = {};
};

inline Skeleton build_skeleton(const GridTiling& t) {
  Skeleton sk;
  sk.p = t.width;
  sk.q = t.height;
  for (const Rect& tile : t.tiles) {
    sk.vertex[tile.x0][tile.y0] = true;
    sk.vertex[tile.x1][tile.y0] = true;
    sk.vertex[tile.x0][tile.y1] = true;
    sk.vertex[tile.x1][tile.y1] = true;
    for (int y = tile.y0; y < tile.y1; ++y) {
      sk.vseg[tile.x0] |= static_cast<uint16_t>(1u << y);
      sk.vseg[tile.x1] |= static_cast<uint16_t>(1u << y);
    }
    for (int x = tile.x0; x < tile.x1; ++x) {
      sk.hseg[tile.y0] |= static_cast<uint16_t>(1u << x);
      sk.hseg[tile.y1] |= static_cast<uint16_t>(1u << x);
    }
  }
  return sk;
}

// Directions in the fixed traversal order.
enum Dir { kNorth = 0, kEast = 1, kSouth = 2, kWest = 3 };

// Nearest skeleton vertex from (x,y) in direction d, or {-1,-1} if the
// incident segment is not part of the skeleton.
inline std::pair<int, int> neighbor(const Skeleton& sk, int x, int y, int d) {
  switch (d) {
    case kNorth:
      for (int cy = y; cy < sk.q; ++cy) {
        if (!((sk.vseg[x] >> cy) & 1)) return {-1, -1};
        if (sk.vertex[x][cy + 1]) return {x, cy + 1};
      }
      return {-1, -1};
    case kSouth:
      for (int cy = y - 1; cy >= 0; --cy) {
        if (!((sk.vseg[x] >> cy) & 1)) return {-1, -1};
        if (sk.vertex[x][cy]) return {x, cy};
      }
      return {-1, -1};
    case kEast:
      for (int cx = x; cx < sk.p; ++cx) {
        if (!((sk.hseg[y] >> cx) & 1)) return {-1, -1};
        if (sk.vertex[cx + 1][y]) return {cx + 1, y};
      }
      return {-1, -1};
    case kWest:
      for (int cx = x - 1; cx >= 0; --cx) {
        if (!((sk.hseg[y] >> cx) & 1)) return {-1, -1};
        if (sk.vertex[cx][y]) return {cx, y};
      }
      return {-1, -1};
  }
  return {-1, -1};
}

}  // namespace detail

// Serializes the directed 1-skeleton: breadth-first from the SW corner,
// scanning each vertex's incident edges in the fixed cyclic order
// N, E, S, W. Per visited vertex the encoding records one byte with the
// present directions and one byte per present direction holding the
// neighbor's discovery index. Realization details (actual wall coordinates,
// grid size) never enter, so the bytes are invariant across realizations of
// one class; conversely the bytes reconstruct the directed skeleton, which
// pins the class.
inline SkeletonEncoding canonical_encoding(const GridTiling& t) {
  const detail::Skeleton sk = detail::build_skeleton(t);
  int index[9][9];
  for (auto& row : index)
    for (int& v : row) v = -1;

  std::vector<std::pair<int, int>> order;
  order.reserve(t.tiles.size() * 2 + 2);
  index[0][0] = 0;
  order.emplace_back(0, 0);

  SkeletonEncoding enc;
  enc.bytes.reserve(order.capacity() * 4);
  for (size_t head = 0; head < order.size(); ++head) {
    const auto [x, y] = order[head];
    unsigned char mask = 0;
    int nbr_index[4];
    int present = 0;
    for (int d = 0; d < 4; ++d) {
      const auto [nx, ny] = detail::neighbor(sk, x, y, d);
      if (nx < 0) continue;
      mask |= static_cast<unsigned char>(1u << d);
      if (index[nx][ny] < 0) {
        index[nx][ny] = static_cast<int>(order.size());
        order.emplace_back(nx, ny);
      }
      nbr_index[present++] = index[nx][ny];
    }
    enc.bytes.push_back(mask);
    for (int i = 0; i < present; ++i) {
      assert(nbr_index[i] < 256);
      enc.bytes.push_back(static_cast<unsigned char>(nbr_index[i]));
    }
  }
  return enc;
}

// Structural statistics of the class realized by a grid tiling. The
// symmetric flag is not set here; it requires comparing encodings of the
// eight square-symmetry images (r is not preserved by them, so stats alone
// cannot decide it).
inline ClassStats class_stats(const GridTiling& t) {
  const detail::Skeleton sk = detail::build_skeleton(t);
  ClassStats st;
  st.m = static_cast<int>(t.tiles.size());
  int degree_sum = 0;
  for (int x = 0; x <= sk.p; ++x)
    for (int y = 0; y <= sk.q; ++y) {
      if (!sk.vertex[x][y]) continue;
      ++st.k;
      int deg = 0;
      for (int d = 0; d < 4; ++d)
        if (detail::neighbor(sk, x, y, d).first >= 0) ++deg;
      degree_sum += deg;
      if (deg == 4 && 0 < x && x < sk.p && 0 < y && y < sk.q) ++st.s;
      if (x == sk.p && 0 < y && y < sk.q) ++st.r;
    }
  st.e = degree_sum / 2;
  return st;
}

}  // namespace rectcount
