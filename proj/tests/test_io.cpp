#include <gtest/gtest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>

#include "json.hpp"
#include "tia/io.hpp"

using namespace tia;

namespace {

std::size_t count_of(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (auto p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++n;
  return n;
}

}  // namespace

TEST(TilingIo, RoundTrip) {
  for (std::uint64_t s = 0; s < 10; ++s) {
    Tiling t = random_tiling(3, 4, {TileKind::Bi, TileKind::Quad}, s);
    std::string text = tiling_to_json(t);
    EXPECT_EQ(text.find('\n'), std::string::npos);  // a single line
    EXPECT_EQ(tiling_from_json(text), t);
  }
  Tiling o = random_tiling(3, 3, {TileKind::OctaSym, TileKind::OctaAsym}, 1);
  EXPECT_EQ(tiling_from_json(tiling_to_json(o)), o);
}

TEST(TilingIo, MalformedInputIsRejected) {
  EXPECT_THROW(tiling_from_json("not json"), Error);
  EXPECT_THROW(tiling_from_json(R"({"rows":1,"cols":1})"), Error);
  EXPECT_THROW(tiling_from_json(R"({"rows":1,"cols":1,"tiles":[[{"kind":"hex","orient":0}]]})"), Error);
  EXPECT_THROW(tiling_from_json(R"({"rows":1,"cols":2,"tiles":[[{"kind":"bi","orient":0}]]})"), Error);
  EXPECT_THROW(tiling_from_json(R"({"rows":1,"cols":1,"tiles":[[{"kind":"quad","orient":3}]]})"), Error);
  EXPECT_THROW(tiling_from_json(R"({"rows":1,"cols":1,"tiles":[[{"kind":"bi","orient":"x"}]]})"), Error);
}

TEST(ColouringIo, RoundTripAndWorkedExample) {
  GridColouring c = colouring_from_text("0202\n1021\n0102\n2020\n");
  EXPECT_EQ(colouring_violation(c), "");
  EXPECT_EQ(colouring_from_text(colouring_to_text(c)), c);
  Tiling t = colouring_to_tiling(c);
  using K = TileKind;
  std::vector<Tile> want{{K::Bi, 3}, {K::Quad, 1}, {K::Bi, 2}, {K::Quad, 0}, {K::Bi, 3},
                         {K::Bi, 3}, {K::Bi, 1},   {K::Bi, 2}, {K::Quad, 0}};
  ASSERT_EQ(t.rows, 3);
  ASSERT_EQ(t.cols, 3);
  EXPECT_EQ(t.tiles, want);
}

TEST(ColouringIo, MalformedInputIsRejected) {
  EXPECT_THROW(colouring_from_text("0202\n102\n"), Error);
  EXPECT_THROW(colouring_from_text("0302\n1021\n"), Error);
  EXPECT_THROW(colouring_from_text(""), Error);
}

TEST(LozengeIo, RoundTripWithAndWithoutDecorations) {
  auto d = random_decorated_tiling(2, 3, 2, 8);
  auto back = lozenge_tiling_from_json(lozenge_tiling_to_json(d));
  EXPECT_EQ(back.tiling.a, 2);
  EXPECT_EQ(back.tiling.b, 3);
  EXPECT_EQ(back.tiling.c, 2);
  EXPECT_EQ(back.tiling.lozenges, d.tiling.lozenges);
  EXPECT_EQ(back.decorations, d.decorations);
  DecoratedLozengeTiling bare{d.tiling, {}};
  auto b2 = lozenge_tiling_from_json(lozenge_tiling_to_json(bare));
  EXPECT_EQ(b2.tiling.lozenges, d.tiling.lozenges);
  EXPECT_TRUE(b2.decorations.empty());
  EXPECT_THROW(lozenge_tiling_from_json(R"({"a":1,"b":1,"c":1,"lozenges":[{"x":0,"y":0,"orient":5}]})"), Error);
}

TEST(AssignmentIo, NamedDeformationsRoundTrip) {
  for (const auto& name : named_deformations()) {
    NamedDeformation n = named_deformation(name);
    NamedDeformation m = assignment_from_json(assignment_to_json(n));
    EXPECT_EQ(m.group, n.group) << name;
    EXPECT_DOUBLE_EQ(m.scale, n.scale);
    ASSERT_EQ(m.assignment.pairs.size(), n.assignment.pairs.size());
    for (std::size_t i = 0; i < n.assignment.pairs.size(); ++i) {
      EXPECT_EQ(m.assignment.pairs[i].polarity, n.assignment.pairs[i].polarity);
      auto p = m.assignment.pairs[i].curve.local_points(), q = n.assignment.pairs[i].curve.local_points();
      ASSERT_EQ(p.size(), q.size()) << name << " " << i;
      for (std::size_t k = 0; k < p.size(); ++k) EXPECT_TRUE(near(p[k], q[k], 1e-12));
    }
  }
}

TEST(AssignmentIo, UserAssignmentParses) {
  NamedDeformation n = assignment_from_json(R"({"group":"p4","domain":{"scale":2},"pairs":[
    {"curve":{"kind":"midpoint_peak","params":{"amplitude":0.25}},"polarity":"inward"},
    {"curve":{"kind":"polyline","params":{"points":[[0.3,0.1],[0.6,-0.1]]}},"polarity":"outward"}]})");
  EXPECT_EQ(n.group, "p4");
  EXPECT_DOUBLE_EQ(n.scale, 2);
  ASSERT_EQ(n.assignment.pairs.size(), 2u);
  EXPECT_EQ(n.assignment.pairs[1].polarity, Polarity::Outward);
  EXPECT_NO_THROW(block_from_assignment(n));
  EXPECT_THROW(assignment_from_json(R"({"group":"p4","pairs":[{"curve":{"kind":"spiral"},"polarity":"inward"}]})"), Error);
  EXPECT_THROW(assignment_from_json(R"({"group":"p4","pairs":[{"curve":{"kind":"zigzag"},"polarity":"up"}]})"), Error);
}

TEST(AssemblyIo, RoundTripKeepsPlacementsAndFrame) {
  Assembly a = select_frame(tiling_to_assembly(random_tiling(3, 3, {TileKind::Bi, TileKind::Quad}, 2), 1.5, 1));
  Assembly b = assembly_from_json(assembly_to_json(a));
  EXPECT_TRUE(same_placements(a, b, 1e-12));
  EXPECT_EQ(b.frame, a.frame);
  EXPECT_DOUBLE_EQ(b.height, 1.5);
  ASSERT_EQ(b.region.vertices.size(), a.region.vertices.size());
  for (std::size_t k = 0; k < a.region.vertices.size(); ++k) EXPECT_TRUE(near(a.region.vertices[k], b.region.vertices[k], 0));
  for (std::size_t i = 0; i < a.placements.size(); ++i) EXPECT_EQ(a.placements[i].index, b.placements[i].index);
}

TEST(AssemblyIo, NonIsometryIsRejected) {
  auto j = nlohmann::json::parse(assembly_to_json(tiling_to_assembly(p4_versatile_tiling(2, 2))));
  j["placements"][0]["matrix"][0] = 2.0;
  EXPECT_THROW(assembly_from_json(j.dump()), Error);
  j = nlohmann::json::parse(assembly_to_json(tiling_to_assembly(p4_versatile_tiling(2, 2))));
  j["placements"][0]["block"] = "nosuch";
  EXPECT_THROW(assembly_from_json(j.dump()).block("nosuch"), Error);
  EXPECT_THROW(assembly_from_json("[]"), Error);
  EXPECT_THROW(assembly_from_json(R"({"region":[[0,0],[1,0],[0,1]],"height":1,"placements":[1]})"), Error);
  EXPECT_THROW(tiling_from_json(R"({"rows":1,"cols":1,"tiles":[[7]]})"), Error);
}

TEST(ReportIo, FieldsArePresent) {
  Assembly a = tiling_to_assembly(p4_versatile_tiling(2, 2), 1.0, 1);
  auto r = verify_space_filling(a, {0.25, 0.5});
  auto j = nlohmann::json::parse(report_to_json(r));
  EXPECT_TRUE(j["pass"].get<bool>());
  EXPECT_NEAR(j["region_area"].get<double>(), 4, 1e-12);
  ASSERT_EQ(j["samples"].size(), 2u);
  EXPECT_DOUBLE_EQ(j["samples"][1]["z"].get<double>(), 0.5);
}

TEST(MeshIo, ReimportWithinRoundingOfFifteenDigits) {
  TriMesh m = assembly_mesh(tiling_to_assembly(random_tiling(2, 2, {TileKind::Bi, TileKind::Quad}, 4)));
  TriMesh back = mesh_from_text(mesh_to_text(m));
  ASSERT_EQ(back.vertices.size(), m.vertices.size());
  EXPECT_EQ(back.faces, m.faces);
  for (std::size_t i = 0; i < m.vertices.size(); ++i) EXPECT_LE(norm(back.vertices[i] - m.vertices[i]), 1e-12);
  EXPECT_EQ(mesh_to_text(back), mesh_to_text(m));
  EXPECT_EQ(mesh_to_text(m).find("-0 "), std::string::npos);
}

TEST(MeshIo, MalformedInputIsRejected) {
  EXPECT_THROW(mesh_from_text("v 0 0 0\nv 1 0 0\nv 0 1 0\nf 1 2 4\n"), Error);
  EXPECT_THROW(mesh_from_text("v 0 0\n"), Error);
  EXPECT_THROW(mesh_from_text("q 1 2 3\n"), Error);
}

TEST(SvgIo, OneShapePerPlacementOrEdge) {
  Assembly a = select_frame(tiling_to_assembly(p4_versatile_tiling(3, 3)));
  std::string s = assembly_svg(a);
  EXPECT_EQ(s.rfind("<svg", 0), 0u);
  EXPECT_EQ(count_of(s, "<path"), a.placements.size() + 1);
  EXPECT_EQ(count_of(s, "#f4d4d4"), a.frame.size());
  std::string t = tiling_svg(p4_versatile_tiling(2, 2));
  EXPECT_NE(t.find("</svg>"), std::string::npos);
}

TEST(FileIo, WriteThenRead) {
  auto path = (std::filesystem::temp_directory_path() / "tia_io_test.txt").string();
  write_text_file(path, "abc\n");
  EXPECT_EQ(read_text_file(path), "abc\n");
  std::remove(path.c_str());
  EXPECT_THROW(read_text_file(path), Error);
  EXPECT_THROW(write_text_file("/nonexistent/dir/x.txt", "x"), Error);
}
