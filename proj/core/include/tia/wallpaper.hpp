#pragma once

#include <array>
#include <string>
#include <vector>

#include "tia/euclid.hpp"

namespace tia {

struct WallpaperGroup {
  std::string name;
  std::vector<Isometry2> generators;
  Vec2 t1, t2;  // lattice basis
  // One representative per coset of the translation subgroup; the first is the identity.
  std::vector<Isometry2> cosets;
};

// One of p1, p2, pg, p2gg, p3, p4, p6.
WallpaperGroup make_group(const std::string& name);
const std::vector<std::string>& feasible_groups();
// Conjugates the group by a uniform scaling about the origin.
WallpaperGroup scaled(const WallpaperGroup& g, double factor);

struct FundamentalDomain {
  Polygon2 polygon;
  // Edge k runs from vertex k to vertex k+1 (counter-clockwise).
  std::vector<std::array<int, 2>> edges;
  std::vector<std::string> edge_names;
  // partner[k] is the paired edge and pairing[k] maps edge k onto it.
  std::vector<int> partner;
  std::vector<Isometry2> pairing;
  // Representative edge of each pair, in pair order.
  std::vector<int> pair_reps;

  Vec2 edge_start(int k) const { return polygon.vertices[edges[k][0]]; }
  Vec2 edge_end(int k) const { return polygon.vertices[edges[k][1]]; }
  int pair_of(int edge) const;
};

// Four-edge domain for the group. For p6 the only variant is the kite.
FundamentalDomain canonical_domain(const WallpaperGroup& g);
FundamentalDomain scaled(const FundamentalDomain& d, double factor);

// Checks pairing structure: involution, coverage, and endpoint correspondence.
bool pairing_consistent(const FundamentalDomain& d, double tol = 1e-12);

// A lattice fundamental region made of exactly |cosets| domain copies.
Polygon2 translation_cell(const WallpaperGroup& g);

struct OrbitCopy {
  Isometry2 g;
  Polygon2 polygon;
  std::array<int, 3> index;  // translation indices (i, j) and coset index
};

// Group images of `shape` whose overlap with the window has positive area.
// Order: lexicographic in (i, j, coset).
std::vector<OrbitCopy> orbit_in_window(const WallpaperGroup& g, const Polygon2& shape,
                                       const Polygon2& window);
// Same enumeration for arbitrary point sets, keeping copies whose bounding box meets the box.
std::vector<OrbitCopy> orbit_near(const WallpaperGroup& g, const std::vector<Vec2>& shape,
                                  const Box2& box);

// Element count of the point group and whether it contains a rotation of the given order.
bool has_rotation_of_order(const WallpaperGroup& g, int order);
bool has_glide(const WallpaperGroup& g);
// True if some pure reflection of the group fixes an edge of the domain pointwise.
bool edge_fixed_by_reflection(const WallpaperGroup& g, const FundamentalDomain& d);

}  // namespace tia
