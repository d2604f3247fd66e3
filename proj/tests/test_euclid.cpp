#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "tia/euclid.hpp"

using namespace tia;

namespace {

const double kPi = std::acos(-1.0);

// Axis-aligned rectangle overlap, computed directly.
double box_overlap(double ax0, double ay0, double ax1, double ay1, double bx0, double by0, double bx1, double by1) {
  double w = std::max(0.0, std::min(ax1, bx1) - std::max(ax0, bx0));
  double h = std::max(0.0, std::min(ay1, by1) - std::max(ay0, by0));
  return w * h;
}

std::vector<Vec2> rect(double x0, double y0, double x1, double y1) { return {{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}}; }

TriMesh unit_cube() {
  TriMesh m;
  for (int i = 0; i < 8; ++i) m.vertices.push_back({double(i & 1), double((i >> 1) & 1), double((i >> 2) & 1)});
  // Outward faces, two triangles per side.
  int q[6][4] = {{0, 2, 3, 1}, {4, 5, 7, 6}, {0, 1, 5, 4}, {2, 6, 7, 3}, {0, 4, 6, 2}, {1, 3, 7, 5}};
  for (auto& f : q) {
    m.faces.push_back({f[0], f[1], f[2]});
    m.faces.push_back({f[0], f[2], f[3]});
  }
  return m;
}

}  // namespace

TEST(Isometry, ComposeAppliesRightFirst) {
  Isometry2 r = Isometry2::rotation(kPi / 2), t = Isometry2::translate({1, 0});
  Vec2 p = compose(t, r).apply({1, 0});
  EXPECT_NEAR(p.x, 1, 1e-12);
  EXPECT_NEAR(p.y, 1, 1e-12);
}

TEST(Isometry, InverseRoundTripOnRandomElements) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-3, 3);
  for (int i = 0; i < 200; ++i) {
    Isometry2 g = compose(Isometry2::rotation(u(rng), {u(rng), u(rng)}),
                          i % 2 ? Isometry2::reflection({u(rng), u(rng)}, {u(rng), 1}) : Isometry2::identity());
    EXPECT_TRUE(is_valid(g));
    EXPECT_EQ(g.proper, i % 2 == 0);
    Vec2 p{u(rng), u(rng)};
    EXPECT_TRUE(near(inverse(g).apply(g.apply(p)), p, 1e-9));
    EXPECT_TRUE(approx_equal(compose(g, inverse(g)), Isometry2::identity(), 1e-9));
  }
}

TEST(Isometry, ReflectionFixesItsLine) {
  Isometry2 m = Isometry2::reflection({1, 1}, {1, 2});
  EXPECT_TRUE(near(m.apply({2, 3}), {2, 3}, 1e-12));
  EXPECT_NEAR(m.det(), -1, 1e-12);
  EXPECT_TRUE(approx_equal(compose(m, m), Isometry2::identity(), 1e-12));
}

TEST(Isometry, GlideSquaresToTranslation) {
  Isometry2 g = Isometry2::glide({0, 0}, {0, 1}, 0.5);
  Isometry2 gg = compose(g, g);
  EXPECT_TRUE(approx_equal(gg, Isometry2::translate({0, 1}), 1e-12));
}

TEST(Polygon, ShoelaceArea) {
  EXPECT_NEAR(polygon_area({rect(0, 0, 2, 3)}), 6, 1e-12);
  std::vector<Vec2> cw = rect(0, 0, 2, 3);
  std::reverse(cw.begin(), cw.end());
  EXPECT_NEAR(signed_area(cw), -6, 1e-12);
}

TEST(Polygon, OrientationIsExactOnSnappedCollinearPoints) {
  EXPECT_EQ(orientation({0, 0}, {1, 1}, {2, 2}), 0);
  EXPECT_EQ(orientation({0, 0}, {1, 0}, {0, 1}), 1);
  EXPECT_EQ(orientation({0, 0}, {0, 1}, {1, 0}), -1);
  // 0.1 + 0.2 style drift stays collinear after snapping.
  EXPECT_EQ(orientation({0.1, 0.1}, {0.3, 0.3}, {0.1 + 0.2 + 0.3, 0.6}), 0);
}

TEST(Polygon, ConvexIntersectionMatchesBoxOracle) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-2, 2);
  for (int i = 0; i < 300; ++i) {
    double a[4] = {u(rng), u(rng), u(rng), u(rng)}, b[4] = {u(rng), u(rng), u(rng), u(rng)};
    if (a[0] > a[2]) std::swap(a[0], a[2]);
    if (a[1] > a[3]) std::swap(a[1], a[3]);
    if (b[0] > b[2]) std::swap(b[0], b[2]);
    if (b[1] > b[3]) std::swap(b[1], b[3]);
    double want = box_overlap(a[0], a[1], a[2], a[3], b[0], b[1], b[2], b[3]);
    EXPECT_NEAR(convex_intersection_area(rect(a[0], a[1], a[2], a[3]), rect(b[0], b[1], b[2], b[3])), want, 1e-9);
  }
}

TEST(Polygon, OverlapOfNonConvexPolygons) {
  // L shape minus its notch: area 3; overlapping a unit square in its notch gives 0.
  Polygon2 L{{{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}}};
  EXPECT_NEAR(polygon_area(L), 3, 1e-12);
  EXPECT_NEAR(overlap_area(L, {rect(1, 1, 2, 2)}), 0, 1e-12);
  EXPECT_NEAR(overlap_area(L, {rect(0.5, 0.5, 1.5, 1.5)}), 0.75, 1e-12);
}

TEST(Polygon, EarClipPreservesAreaAndPicksLowestEar) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    // Random star-shaped polygon around the origin.
    std::vector<Vec2> ring;
    int n = 5 + i % 9;
    for (int k = 0; k < n; ++k) {
      double t = 2 * kPi * k / n, r = 0.5 + std::uniform_real_distribution<double>(0, 1)(rng);
      ring.push_back({r * std::cos(t), r * std::sin(t)});
    }
    auto tris = ear_clip(ring);
    ASSERT_EQ(tris.size(), static_cast<std::size_t>(n - 2));
    double sum = 0;
    for (auto t : tris) {
      double a = signed_area({ring[t[0]], ring[t[1]], ring[t[2]]});
      EXPECT_GT(a, 0);
      sum += a;
    }
    EXPECT_NEAR(sum, signed_area(ring), 1e-12);
  }
  auto again = ear_clip({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  EXPECT_EQ(again, ear_clip({{0, 0}, {1, 0}, {1, 1}, {0, 1}}));
}

TEST(Polyline, CrossingVersusTouching) {
  Polyline2 a{{{0, 0}, {2, 2}}}, b{{{0, 2}, {2, 0}}}, c{{{1, 1}, {2, 1}}}, d{{{2, 2}, {3, 0}}};
  EXPECT_TRUE(polylines_cross(a, b));
  EXPECT_FALSE(polylines_cross(a, c));  // touches at an endpoint
  EXPECT_FALSE(polylines_cross(a, d));  // shared endpoint
  Polyline2 bow{{{0, 0}, {1, 1}, {1, 0}, {0, 1}}, true};
  EXPECT_TRUE(polyline_self_crosses(bow));
  Polyline2 sq{rect(0, 0, 1, 1), true};
  EXPECT_FALSE(polyline_self_crosses(sq));
}

TEST(Polygon, RingCleaningSplitsPinches) {
  // Two unit squares sharing the vertex (1, 1), traversed as one ring.
  std::vector<Vec2> ring{{0, 0}, {1, 0}, {1, 1}, {2, 1}, {2, 2}, {1, 2}, {1, 1}, {0, 1}};
  auto parts = ring_to_polygons(ring);
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_NEAR(total_area(parts), 2, 1e-12);
  // A slit out and back is removed.
  auto clean = clean_ring({{0, 0}, {1, 0}, {1, 0.5}, {1.5, 0.5}, {1, 0.5}, {1, 1}, {0, 1}});
  EXPECT_NEAR(signed_area(clean), 1, 1e-12);
}

TEST(Polygon, ContainsAndBoundaryDistance) {
  Polygon2 sq{rect(0, 0, 1, 1)};
  EXPECT_TRUE(contains(sq, {0.5, 0.5}));
  EXPECT_TRUE(contains(sq, {1, 0.5}));
  EXPECT_FALSE(contains(sq, {1.1, 0.5}));
  EXPECT_NEAR(distance_to_boundary(sq, {0.5, 0.25}), 0.25, 1e-12);
}

TEST(Mesh, CubeInvariants) {
  TriMesh m = unit_cube();
  EXPECT_TRUE(is_closed(m));
  EXPECT_EQ(euler_characteristic(m), 2);
  EXPECT_EQ(edge_count(m), 18u);
  EXPECT_NEAR(mesh_volume(m), 1, 1e-12);
  for (double z : {0.0, 0.3, 0.5, 1.0}) EXPECT_NEAR(total_area(mesh_cross_section(m, z)), 1, 1e-12) << z;
}

TEST(Mesh, OpenMeshIsRejected) {
  TriMesh m = unit_cube();
  m.faces.pop_back();
  EXPECT_FALSE(is_closed(m));
  EXPECT_THROW(mesh_volume(m), Error);
}
