#include <algorithm>
#include <limits>
#include <map>
#include <set>

#include "tia/euclid.hpp"

namespace tia {

namespace {

using Edge = std::pair<int, int>;

std::map<Edge, int> directed_edges(const TriMesh& m) {
  std::map<Edge, int> count;
  for (const auto& f : m.faces)
    for (int k = 0; k < 3; ++k) ++count[{f[k], f[(k + 1) % 3]}];
  return count;
}

// Chains directed edges into closed vertex loops.
std::vector<std::vector<int>> chain_loops(const std::vector<Edge>& edges) {
  std::multimap<int, int> out;
  for (auto [a, b] : edges) out.insert({a, b});
  std::vector<std::vector<int>> loops;
  while (!out.empty()) {
    auto it = out.begin();
    int start = it->first;
    std::vector<int> loop{start};
    int cur = it->second;
    out.erase(it);
    while (cur != start) {
      loop.push_back(cur);
      auto nx = out.find(cur);
      if (nx == out.end()) throw Error("cross-section contour does not close");
      cur = nx->second;
      out.erase(nx);
    }
    loops.push_back(loop);
  }
  return loops;
}

std::vector<Polygon2> footprint(const TriMesh& m, double z, bool top) {
  std::vector<Edge> dir;
  std::set<Edge> all;
  for (const auto& f : m.faces) {
    bool flat = true;
    for (int v : f) flat = flat && std::abs(m.vertices[v].z - z) <= 1e-12;
    if (!flat) continue;
    for (int k = 0; k < 3; ++k) {
      Edge e = top ? Edge{f[k], f[(k + 1) % 3]} : Edge{f[(k + 1) % 3], f[k]};
      all.insert(e);
    }
  }
  for (auto e : all)
    if (!all.count({e.second, e.first})) dir.push_back(e);
  std::vector<Polygon2> out;
  for (const auto& loop : chain_loops(dir)) {
    std::vector<Vec2> ring;
    for (int v : loop) ring.push_back({m.vertices[v].x, m.vertices[v].y});
    for (auto& p : ring_to_polygons(ring)) out.push_back(std::move(p));
  }
  return out;
}

}  // namespace

bool is_closed(const TriMesh& m) {
  if (m.faces.empty()) return false;
  for (const auto& f : m.faces)
    if (f[0] == f[1] || f[1] == f[2] || f[0] == f[2]) return false;
  auto count = directed_edges(m);
  for (auto [e, c] : count) {
    if (c != 1) return false;
    auto r = count.find({e.second, e.first});
    if (r == count.end() || r->second != 1) return false;
  }
  return true;
}

std::size_t edge_count(const TriMesh& m) {
  std::set<Edge> s;
  for (const auto& f : m.faces)
    for (int k = 0; k < 3; ++k) {
      int a = f[k], b = f[(k + 1) % 3];
      s.insert({std::min(a, b), std::max(a, b)});
    }
  return s.size();
}

int euler_characteristic(const TriMesh& m) {
  return static_cast<int>(m.vertices.size()) - static_cast<int>(edge_count(m)) +
         static_cast<int>(m.faces.size());
}

double mesh_volume(const TriMesh& m) {
  if (!is_closed(m)) throw Error("open mesh");
  double v = 0;
  for (const auto& f : m.faces)
    v += dot(m.vertices[f[0]], cross(m.vertices[f[1]], m.vertices[f[2]]));
  return v / 6;
}

std::vector<Polygon2> mesh_cross_section(const TriMesh& m, double z) {
  if (m.vertices.empty()) throw Error("empty mesh");
  double zmin = std::numeric_limits<double>::max(), zmax = std::numeric_limits<double>::lowest();
  for (const auto& v : m.vertices) {
    zmin = std::min(zmin, v.z);
    zmax = std::max(zmax, v.z);
  }
  if (z < zmin - kTol || z > zmax + kTol) throw Error("z outside slab");
  if (std::abs(z - zmax) <= kTol) return footprint(m, zmax, true);
  if (std::abs(z - zmin) <= kTol) return footprint(m, zmin, false);

  // Vertices on the plane count as above, i.e. the slice is the limit from below.
  auto above = [&](int v) { return m.vertices[v].z >= z; };
  std::map<Edge, Edge> next;
  for (const auto& f : m.faces) {
    Edge up{-1, -1}, down{-1, -1};
    for (int k = 0; k < 3; ++k) {
      int a = f[k], b = f[(k + 1) % 3];
      Edge key{std::min(a, b), std::max(a, b)};
      if (!above(a) && above(b)) up = key;
      if (above(a) && !above(b)) down = key;
    }
    if (up.first < 0 || down.first < 0) continue;
    next[down] = up;
  }
  auto point = [&](Edge e) {
    const Vec3 &a = m.vertices[e.first], &b = m.vertices[e.second];
    double t = (z - a.z) / (b.z - a.z);
    return Vec2{a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};
  };
  std::vector<Polygon2> out;
  while (!next.empty()) {
    Edge start = next.begin()->first, cur = start;
    std::vector<Vec2> ring;
    do {
      ring.push_back(point(cur));
      auto it = next.find(cur);
      if (it == next.end()) throw Error("cross-section contour does not close");
      Edge nx = it->second;
      next.erase(it);
      cur = nx;
    } while (!(cur == start));
    for (auto& p : ring_to_polygons(ring)) out.push_back(std::move(p));
  }
  return out;
}

}  // namespace tia
