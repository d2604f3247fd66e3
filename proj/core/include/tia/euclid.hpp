#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <vector>

#include "tia/error.hpp"

namespace tia {

// Absolute tolerance for geometric equality.
inline constexpr double kTol = 1e-9;
// Grid that coordinates are snapped to before orientation predicates.
inline constexpr double kSnap = 1e-12;

struct Vec2 {
  double x = 0, y = 0;
  Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(double s) const { return {x * s, y * s}; }
  Vec2 operator-() const { return {-x, -y}; }
};
inline Vec2 operator*(double s, Vec2 v) { return v * s; }
inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }
inline double dist(Vec2 a, Vec2 b) { return norm(a - b); }
inline bool near(Vec2 a, Vec2 b, double tol = kTol) {
  return std::abs(a.x - b.x) <= tol && std::abs(a.y - b.y) <= tol;
}
// Left-hand unit normal of direction d.
inline Vec2 left_normal(Vec2 d) {
  double n = norm(d);
  return {-d.y / n, d.x / n};
}

struct Vec3 {
  double x = 0, y = 0, z = 0;
  Vec3 operator+(Vec3 o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3 operator-(Vec3 o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
};
inline double dot(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(Vec3 a, Vec3 b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(Vec3 a) { return std::sqrt(dot(a, a)); }

// Rigid motion x -> linear*x + translation. Row-major linear part.
struct Isometry2 {
  std::array<double, 4> linear{1, 0, 0, 1};
  Vec2 translation{};
  bool proper = true;

  Vec2 apply(Vec2 p) const {
    return {linear[0] * p.x + linear[1] * p.y + translation.x,
            linear[2] * p.x + linear[3] * p.y + translation.y};
  }
  Vec2 apply_linear(Vec2 v) const {
    return {linear[0] * v.x + linear[1] * v.y, linear[2] * v.x + linear[3] * v.y};
  }
  double det() const { return linear[0] * linear[3] - linear[1] * linear[2]; }

  static Isometry2 identity() { return {}; }
  static Isometry2 translate(Vec2 t);
  // Counter-clockwise rotation by `angle` radians about `centre`.
  static Isometry2 rotation(double angle, Vec2 centre = {});
  // Reflection in the line through `point` with direction `dir`.
  static Isometry2 reflection(Vec2 point, Vec2 dir);
  // Reflection in the line through `point` along `dir`, then a shift of `shift` along it.
  static Isometry2 glide(Vec2 point, Vec2 dir, double shift);
};

// Applies b first, then a.
Isometry2 compose(const Isometry2& a, const Isometry2& b);
Isometry2 inverse(const Isometry2& g);
bool approx_equal(const Isometry2& a, const Isometry2& b, double tol = kTol);
// Validity check for the orthogonality and determinant/flag agreement.
bool is_valid(const Isometry2& g, double tol = 1e-12);

struct Polygon2 {
  std::vector<Vec2> vertices;  // counter-clockwise, no repeated closing vertex
};

struct Polyline2 {
  std::vector<Vec2> points;
  bool closed = false;  // closed rings do not repeat their first point
};

using Triangle2 = std::array<Vec2, 3>;

double signed_area(const std::vector<Vec2>& ring);
// Positive shoelace area; throws for degenerate input.
double polygon_area(const Polygon2& p);
Polygon2 transformed(const Isometry2& g, const Polygon2& p);
Polyline2 transformed(const Isometry2& g, const Polyline2& p);
double polyline_length(const Polyline2& p);

struct Box2 {
  double x0 = 0, y0 = 0, x1 = -1, y1 = -1;
  bool overlaps(const Box2& o, double pad = 0) const {
    return x0 <= o.x1 + pad && o.x0 <= x1 + pad && y0 <= o.y1 + pad && o.y0 <= y1 + pad;
  }
};
Box2 bounding_box(const std::vector<Vec2>& pts);

// Exact orientation sign after snapping to the kSnap grid: +1 left turn, -1 right, 0 collinear.
int orientation(Vec2 a, Vec2 b, Vec2 c);

// True iff the curves cross transversally somewhere. Shared endpoints,
// collinear overlaps and tangential touching are not crossings.
bool polylines_cross(const Polyline2& a, const Polyline2& b);
// Transversal self-crossing test for a single curve (touching allowed).
bool polyline_self_crosses(const Polyline2& p);

// Removes consecutive duplicates and back-and-forth spikes from a closed ring.
std::vector<Vec2> clean_ring(std::vector<Vec2> ring, double tol = 1e-12);
// Splits a closed ring at vertices it visits more than once.
std::vector<std::vector<Vec2>> split_pinches(const std::vector<Vec2>& ring, double tol = 1e-12);
// clean_ring + split_pinches, dropping pieces with negligible area.
std::vector<Polygon2> ring_to_polygons(const std::vector<Vec2>& ring, double tol = 1e-12);

// Ear clipping of a counter-clockwise ring; the lowest-index ear is cut first.
// Returns vertex index triples into `ring`.
std::vector<std::array<int, 3>> ear_clip(const std::vector<Vec2>& ring);
std::vector<Triangle2> triangulate(const Polygon2& p);

// Area of the intersection of two convex counter-clockwise polygons.
double convex_intersection_area(const std::vector<Vec2>& a, const std::vector<Vec2>& b);
// Area of the intersection of two simple polygons.
double overlap_area(const Polygon2& a, const Polygon2& b);
double overlap_area(const std::vector<Triangle2>& a, const std::vector<Triangle2>& b);

// Point inside or on the boundary (within tol) of a simple polygon.
bool contains(const Polygon2& p, Vec2 q, double tol = kTol);
double distance_to_boundary(const Polygon2& p, Vec2 q);

// ---- triangle meshes ----

struct TriMesh {
  std::vector<Vec3> vertices;
  std::vector<std::array<int, 3>> faces;  // outward oriented
};

// Every directed edge is matched by exactly one opposite directed edge.
bool is_closed(const TriMesh& m);
int euler_characteristic(const TriMesh& m);
std::size_t edge_count(const TriMesh& m);
// Divergence-theorem volume; throws for open meshes.
double mesh_volume(const TriMesh& m);
// Planar slice at height z as counter-clockwise polygons.
std::vector<Polygon2> mesh_cross_section(const TriMesh& m, double z);
double total_area(const std::vector<Polygon2>& ps);

}  // namespace tia
