#pragma once

// Independent reference computations used by the tests. Nothing here calls the
// library's own area, clipping or counting routines.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "tia/euclid.hpp"
#include "tia/truchet.hpp"

namespace oracle {

using tia::Vec2;

inline double shoelace(const std::vector<Vec2>& p) {
  double s = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Vec2& a = p[i];
    const Vec2& b = p[(i + 1) % p.size()];
    s += a.x * b.y - a.y * b.x;
  }
  return s / 2;
}

// Sutherland-Hodgman against a convex counter-clockwise clip polygon.
inline std::vector<Vec2> clip(std::vector<Vec2> subject, const std::vector<Vec2>& convex) {
  for (std::size_t e = 0; e < convex.size() && !subject.empty(); ++e) {
    Vec2 a = convex[e], b = convex[(e + 1) % convex.size()];
    auto side = [&](Vec2 p) { return (b.x - a.x) * (p.y - a.y) - (b.y - a.y) * (p.x - a.x); };
    std::vector<Vec2> out;
    for (std::size_t i = 0; i < subject.size(); ++i) {
      Vec2 p = subject[i], q = subject[(i + 1) % subject.size()];
      double sp = side(p), sq = side(q);
      if (sp >= 0) out.push_back(p);
      if ((sp >= 0) != (sq >= 0)) {
        double t = sp / (sp - sq);
        out.push_back({p.x + (q.x - p.x) * t, p.y + (q.y - p.y) * t});
      }
    }
    subject = std::move(out);
  }
  return subject;
}

// Fan triangulation is valid for the convex pieces we feed in; non-convex
// shapes go through a simple O(n^3) ear search written here.
inline std::vector<std::vector<Vec2>> ears(std::vector<Vec2> ring) {
  std::vector<std::vector<Vec2>> out;
  if (shoelace(ring) < 0) std::reverse(ring.begin(), ring.end());
  auto cr = [](Vec2 o, Vec2 a, Vec2 b) { return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x); };
  while (ring.size() > 3) {
    bool cut = false;
    for (std::size_t i = 0; i < ring.size() && !cut; ++i) {
      std::size_t n = ring.size();
      Vec2 a = ring[(i + n - 1) % n], b = ring[i], c = ring[(i + 1) % n];
      if (cr(a, b, c) <= 1e-15) continue;
      bool empty = true;
      for (std::size_t j = 0; j < n && empty; ++j) {
        Vec2 p = ring[j];
        if (j == i || j == (i + 1) % n || j == (i + n - 1) % n) continue;
        if (std::hypot(p.x - a.x, p.y - a.y) < 1e-12 || std::hypot(p.x - c.x, p.y - c.y) < 1e-12) continue;
        if (cr(a, b, p) >= -1e-15 && cr(b, c, p) >= -1e-15 && cr(c, a, p) >= -1e-15) empty = false;
      }
      if (!empty) continue;
      out.push_back({a, b, c});
      ring.erase(ring.begin() + static_cast<long>(i));
      cut = true;
    }
    if (!cut) {
      // Degenerate leftovers (collinear runs) carry no area.
      std::size_t n = ring.size();
      bool all_flat = true;
      for (std::size_t i = 0; i < n; ++i)
        if (std::abs(cr(ring[(i + n - 1) % n], ring[i], ring[(i + 1) % n])) > 1e-12) all_flat = false;
      if (all_flat) return out;
      ring.erase(ring.begin());
    }
  }
  if (ring.size() == 3 && shoelace(ring) > 0) out.push_back(ring);
  return out;
}

struct Partition {
  double covered = 0;      // area of the union of pieces inside the window, counted with multiplicity
  double max_overlap = 0;  // largest overlap between pieces of different owners
};

// pieces[i] holds the polygons of owner i. The window must be convex and counter-clockwise.
inline Partition partition(const std::vector<std::vector<std::vector<Vec2>>>& owners, const std::vector<Vec2>& window) {
  std::vector<std::vector<std::vector<Vec2>>> tri(owners.size());
  Partition r;
  for (std::size_t i = 0; i < owners.size(); ++i)
    for (const auto& poly : owners[i])
      for (const auto& t : ears(poly)) {
        auto c = clip(t, window);
        if (c.size() < 3) continue;
        double a = shoelace(c);
        if (a <= 0) continue;
        r.covered += a;
        tri[i].push_back(c);
      }
  for (std::size_t i = 0; i < tri.size(); ++i)
    for (std::size_t j = i + 1; j < tri.size(); ++j) {
      double ov = 0;
      for (const auto& a : tri[i])
        for (const auto& b : tri[j]) {
          auto c = clip(a, b);
          if (c.size() >= 3) ov += std::max(0.0, shoelace(c));
        }
      r.max_overlap = std::max(r.max_overlap, ov);
    }
  return r;
}

// Count of n x m tilings by direct search over the 6 tile faces, with compatibility
// written from scratch: each tile is described by its edge colour pairs in
// counter-clockwise order (bottom, right, top, left), 1 = black.
struct TileFace {
  int e[4][2];
};
inline const std::vector<TileFace>& bi_quad_faces() {
  // Bi k has black triangle at corner k (0 lower-left, 1 lower-right, 2 upper-right,
  // 3 upper-left); Quad 0 black at top and bottom, Quad 1 black left and right.
  static const std::vector<TileFace> f = [] {
    std::vector<TileFace> v;
    const int corner_edges[4][2] = {{0, 3}, {0, 1}, {1, 2}, {2, 3}};
    for (int k = 0; k < 4; ++k) {
      TileFace t{};
      for (int e : corner_edges[k]) t.e[e][0] = t.e[e][1] = 1;
      v.push_back(t);
    }
    TileFace q0{}, q1{};
    q0.e[0][0] = q0.e[0][1] = q0.e[2][0] = q0.e[2][1] = 1;
    q1.e[1][0] = q1.e[1][1] = q1.e[3][0] = q1.e[3][1] = 1;
    v.push_back(q0);
    v.push_back(q1);
    return v;
  }();
  return f;
}

// Opposite colours meet along shared edges; parameters run counter-clockwise
// on each tile, so the halves pair up reversed.
inline bool fits_right(const TileFace& l, const TileFace& r) {
  return l.e[1][0] != r.e[3][1] && l.e[1][1] != r.e[3][0];
}
inline bool fits_below(const TileFace& above, const TileFace& below) {
  return above.e[0][0] != below.e[2][1] && above.e[0][1] != below.e[2][0];
}

inline std::uint64_t brute_count(int n, int m) {
  const auto& F = bi_quad_faces();
  std::vector<int> pick(static_cast<std::size_t>(n) * m, -1);
  std::uint64_t total = 0;
  std::size_t pos = 0, N = pick.size();
  while (true) {
    if (pos == N) {
      ++total;
      --pos;
    }
    bool placed = false;
    while (++pick[pos] < static_cast<int>(F.size())) {
      int r = static_cast<int>(pos) / m, c = static_cast<int>(pos) % m;
      const TileFace& t = F[pick[pos]];
      if (c > 0 && !fits_right(F[pick[pos - 1]], t)) continue;
      if (r > 0 && !fits_below(F[pick[pos - m]], t)) continue;
      placed = true;
      break;
    }
    if (placed) {
      ++pos;
    } else {
      pick[pos] = -1;
      if (pos == 0) break;
      --pos;
    }
  }
  return total;
}

// Proper 3-colourings of the rows x cols grid graph with the corner colour fixed.
inline std::uint64_t grid_colourings(int rows, int cols) {
  std::vector<int> c(static_cast<std::size_t>(rows) * cols, -1);
  c[0] = 0;
  std::uint64_t total = 0;
  std::size_t pos = 1, N = c.size();
  if (N == 1) return 1;
  while (true) {
    if (pos == N) {
      ++total;
      --pos;
    }
    bool placed = false;
    while (++c[pos] < 3) {
      int r = static_cast<int>(pos) / cols, k = static_cast<int>(pos) % cols;
      if (k > 0 && c[pos - 1] == c[pos]) continue;
      if (r > 0 && c[pos - cols] == c[pos]) continue;
      placed = true;
      break;
    }
    if (placed) {
      ++pos;
    } else {
      c[pos] = -1;
      if (pos == 1) break;
      --pos;
    }
  }
  return total;
}

// All proper colourings of the grid with colour 0 in the corner.
inline std::vector<tia::GridColouring> all_grid_colourings(int rows, int cols) {
  std::vector<tia::GridColouring> out;
  tia::GridColouring c(rows, cols);
  std::vector<int>& v = c.colours;
  std::fill(v.begin(), v.end(), -1);
  v[0] = 0;
  std::size_t pos = 1;
  while (true) {
    if (pos == v.size()) {
      out.push_back(c);
      --pos;
    }
    bool ok = false;
    while (++v[pos] < 3) {
      int r = static_cast<int>(pos) / cols, k = static_cast<int>(pos) % cols;
      if ((k == 0 || v[pos - 1] != v[pos]) && (r == 0 || v[pos - cols] != v[pos])) {
        ok = true;
        break;
      }
    }
    if (ok) {
      ++pos;
    } else {
      v[pos] = -1;
      if (--pos == 0) break;
    }
  }
  return out;
}

}  // namespace oracle
