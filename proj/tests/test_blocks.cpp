#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "oracles.hpp"
#include "tia/blocks.hpp"

using namespace tia;

namespace {

const double r2 = std::sqrt(2.0), r3 = std::sqrt(3.0), r6 = std::sqrt(6.0);

// Area of the horizontal slice at z from the outward-oriented faces crossing
// it: each crossing gives a boundary segment, oriented so the solid is on its left.
double slice_area(const TriMesh& m, double z) {
  double twice = 0;
  for (const auto& f : m.faces) {
    Vec3 v[3] = {m.vertices[f[0]], m.vertices[f[1]], m.vertices[f[2]]};
    Vec3 n = cross(v[1] - v[0], v[2] - v[0]);
    std::vector<Vec2> hits;
    for (int i = 0; i < 3; ++i) {
      Vec3 a = v[i], b = v[(i + 1) % 3];
      if ((a.z - z) * (b.z - z) < 0) {
        double t = (z - a.z) / (b.z - a.z);
        hits.push_back({a.x + (b.x - a.x) * t, a.y + (b.y - a.y) * t});
      }
    }
    if (hits.size() != 2) continue;
    Vec2 p = hits[0], q = hits[1], d = q - p;
    if (d.y * n.x - d.x * n.y < 0) std::swap(p, q);
    twice += p.x * q.y - p.y * q.x;
  }
  return twice / 2;
}

std::vector<Vec3> bisquare_reference() {
  double h = r2 / 2;
  return {{-h, h, 0}, {h, h, 0}, {h, -h, 0}, {-h, -h, 0}, {-h, h, 1}, {0, r2, 1},
          {h, h, 1},  {h, -h, 1}, {0, -r2, 1}, {-h, -h, 1}, {0, 0, 1}};
}

int find_vertex(const TriMesh& m, Vec3 p, double tol) {
  for (std::size_t i = 0; i < m.vertices.size(); ++i)
    if (norm(m.vertices[i] - p) <= tol) return static_cast<int>(i);
  return -1;
}

bool same_vertex_set(const TriMesh& m, const std::vector<Vec3>& want, double tol) {
  if (m.vertices.size() != want.size()) return false;
  for (const auto& p : want)
    if (find_vertex(m, p, tol) < 0) return false;
  return true;
}

}  // namespace

TEST(Bisquare, VerticesMatchReferenceCoordinates) {
  Block b = canonical_block("bisquare");
  EXPECT_TRUE(same_vertex_set(b.mesh, bisquare_reference(), 1e-12));
}

TEST(Bisquare, FaceIncidencesMatchUpToRelabelling) {
  Block b = canonical_block("bisquare");
  auto ref = bisquare_reference();
  const int faces[18][3] = {{1, 2, 4}, {2, 3, 4}, {5, 6, 7},  {5, 7, 11},  {8, 9, 10}, {8, 10, 11},
                            {4, 9, 10}, {3, 8, 9}, {3, 4, 9},  {1, 4, 11},  {1, 5, 11}, {4, 10, 11},
                            {2, 6, 7},  {1, 5, 6}, {2, 3, 11}, {2, 7, 11},  {3, 8, 11}, {1, 2, 6}};
  std::vector<int> label(ref.size());
  for (std::size_t i = 0; i < ref.size(); ++i) {
    label[i] = find_vertex(b.mesh, ref[i], 1e-12);
    ASSERT_GE(label[i], 0);
  }
  std::set<std::array<int, 3>> want, got;
  for (const auto& f : faces) {
    std::array<int, 3> t{label[f[0] - 1], label[f[1] - 1], label[f[2] - 1]};
    std::sort(t.begin(), t.end());
    want.insert(t);
  }
  for (auto f : b.mesh.faces) {
    std::sort(f.begin(), f.end());
    got.insert(f);
  }
  EXPECT_EQ(b.mesh.faces.size(), 18u);
  EXPECT_EQ(got, want);
}

TEST(Bisquare, ClosedWithVolumeTwo) {
  Block b = canonical_block("bisquare");
  EXPECT_TRUE(is_closed(b.mesh));
  EXPECT_EQ(euler_characteristic(b.mesh), 2);
  EXPECT_NEAR(block_volume(b), 2, 1e-9);
}

TEST(Rhom, VerticesMatchReferenceCoordinates) {
  double h = r6 / 3;
  std::vector<Vec3> rhom{{0, 0, 0}, {0.5, r3 / 2, 0}, {1, 0, 0}, {0.5, -r3 / 2, 0}, {0, 0, h},
                         {0.5, r3 / 6, h}, {1, 0, h}, {1, -r3 / 3, h}, {0.5, -r3 / 2, h}, {0, -r3 / 3, h}};
  std::vector<Vec3> obverse{{0, 0, 0}, {0.5, r3 / 2, 0}, {1, 0, 0}, {0.5, -r3 / 2, 0}, {0, 0, h}, {0.5, r3 / 6, h},
                            {0.5, r3 / 2, h}, {1, r3 / 3, h}, {1, 0, h}, {0.5, -r3 / 6, h}, {0.5, -r3 / 2, h},
                            {0, -r3 / 3, h}};
  Block a = canonical_block("rhom"), b = canonical_block("rhom_obverse");
  EXPECT_EQ(a.mesh.vertices.size(), 10u);
  EXPECT_EQ(b.mesh.vertices.size(), 12u);
  EXPECT_TRUE(same_vertex_set(a.mesh, rhom, 1e-12));
  EXPECT_TRUE(same_vertex_set(b.mesh, obverse, 1e-12));
  EXPECT_NEAR(block_volume(a), block_volume(b), 1e-9);
  EXPECT_NEAR(block_volume(a), (r3 / 2) * h, 1e-9);
}

class CanonicalBlock : public ::testing::TestWithParam<std::string> {};

TEST_P(CanonicalBlock, ClosedGenusZeroWithPrismVolume) {
  Block b = canonical_block(GetParam());
  EXPECT_TRUE(is_closed(b.mesh));
  EXPECT_EQ(euler_characteristic(b.mesh), 2);
  EXPECT_NEAR(block_volume(b), b.domain_area * b.height, 1e-9);
}

TEST_P(CanonicalBlock, CrossSectionAreaIsConstant) {
  Block b = canonical_block(GetParam());
  for (int k = 0; k < 20; ++k) {
    double z = b.height * (k + 0.5) / 20;
    EXPECT_NEAR(slice_area(b.mesh, z), b.domain_area, 1e-9) << "z = " << z;
    EXPECT_NEAR(total_area(mesh_cross_section(b.mesh, z)), b.domain_area, 1e-9) << "z = " << z;
  }
  EXPECT_NEAR(total_area(b.bottom), b.domain_area, 1e-9);
  EXPECT_NEAR(total_area(b.top), b.domain_area, 1e-9);
}

TEST_P(CanonicalBlock, HeightScalesVolume) {
  Block b = canonical_block(GetParam(), 2.0);
  EXPECT_NEAR(b.height, 2.0, 0);
  EXPECT_NEAR(block_volume(b), 2.0 * b.domain_area, 1e-9);
}

TEST_P(CanonicalBlock, ReflectedCopyStaysOutward) {
  Block b = transformed(Isometry2::reflection({0.3, 0}, {1, 1}), canonical_block(GetParam()));
  EXPECT_TRUE(is_closed(b.mesh));
  EXPECT_NEAR(block_volume(b), b.domain_area * b.height, 1e-9);
}

INSTANTIATE_TEST_SUITE_P(All, CanonicalBlock, ::testing::ValuesIn(canonical_block_names()));

TEST(Blocks, VersatileVolumeScalesWithHeight) {
  EXPECT_NEAR(block_volume(canonical_block("versatile", 2.0)), 2.0, 1e-9);
}

TEST(Blocks, UnknownNamesThrow) {
  EXPECT_THROW(canonical_block("nosuch"), Error);
  EXPECT_THROW(canonical_block_set("nosuch"), Error);
}

TEST(Blocks, PairSetsHoldMirrorPartners) {
  auto pg = canonical_block_set("pg_pair");
  ASSERT_EQ(pg.size(), 2u);
  Block m = transformed(pair_alignment("pg_pair"), pg[0]);
  ASSERT_EQ(m.mesh.vertices.size(), pg[1].mesh.vertices.size());
  for (std::size_t i = 0; i < m.mesh.vertices.size(); ++i) EXPECT_LT(norm(m.mesh.vertices[i] - pg[1].mesh.vertices[i]), 1e-12);
}

TEST(Blocks, TopPolaritiesOfTheP4Family) {
  using P = Polarity;
  auto count_in = [](const std::vector<P>& v) { return std::count(v.begin(), v.end(), P::Inward); };
  for (const char* n : {"versatile", "bisquare_unit", "zigzag_asym"}) {
    auto p = top_polarities(n);
    ASSERT_EQ(p.size(), 4u) << n;
    EXPECT_EQ(count_in(p), 2) << n;
  }
  // Versatile: the two inward edges are adjacent; bisquare: opposite.
  auto v = top_polarities("versatile");
  EXPECT_TRUE(v[0] != v[2]);
  auto q = top_polarities("bisquare_unit");
  EXPECT_TRUE(q[0] == q[2]);
  // A zigzag first departs inwards from either side of a shared edge.
  EXPECT_EQ(count_in(top_polarities("zigzag_sym")), 4);
  EXPECT_THROW(top_polarities("double_versatile"), Error);
}

TEST(Blocks, DomainOfEachBlockIsItsBottom) {
  for (const auto& n : canonical_block_names()) {
    BlockDomain d = block_domain(n);
    Block b = canonical_block(n);
    EXPECT_NEAR(oracle::shoelace(d.domain.polygon.vertices), b.domain_area, 1e-9) << n;
  }
}

TEST(Blocks, AssignmentBlockMatchesNamedBlock) {
  Block a = block_from_assignment(named_deformation("versatile"));
  Block b = canonical_block("versatile");
  ASSERT_EQ(a.mesh.vertices.size(), b.mesh.vertices.size());
  EXPECT_EQ(a.mesh.faces, b.mesh.faces);
  auto bad = named_deformation("quadratic_versatile");
  EXPECT_THROW(block_from_assignment(bad), Error);
}
