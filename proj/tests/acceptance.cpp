// Prints one PASS/FAIL line per acceptance criterion; exits non-zero on any FAIL.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "tia/assembly.hpp"

using namespace tia;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = true;
  std::ostringstream note;
  void fail(const std::string& why) {
    if (pass) note << why;
    pass = false;
  }
};

const std::uint64_t kTable[4][4] = {
    {6, 18, 54, 162}, {18, 82, 374, 1706}, {54, 374, 2604, 18150}, {162, 1706, 18150, 193662}};

void table_counts(Outcome& o) {
  auto t0 = Clock::now();
  for (int n = 1; n <= 4; ++n)
    for (int m = 1; m <= 4; ++m)
      if (count_tilings(n, m) != BigInt(kTable[n - 1][m - 1]))
        o.fail("count mismatch at " + std::to_string(n) + "x" + std::to_string(m) + "; ");
  double s = seconds_since(t0);
  if (s >= 1.0) o.fail("took " + std::to_string(s) + " s; ");
  o.note << "16 entries, " << s << " s";
}

void four_way(Outcome& o) {
  auto t0 = Clock::now();
  for (int n = 1; n <= 3; ++n)
    for (int m = 1; m <= 3; ++m) {
      BigInt want(kTable[n - 1][m - 1]);
      BigInt brute(oracle::brute_count(n, m)), enumerated(enumerate_tilings(n, m).size());
      BigInt colourings(oracle::grid_colourings(n + 1, m + 1));
      if (brute != want || enumerated != want || count_tilings(n, m) != want || colourings != want)
        o.fail("disagreement at " + std::to_string(n) + "x" + std::to_string(m) + "; ");
    }
  double s = seconds_since(t0);
  if (s >= 30.0) o.fail("took " + std::to_string(s) + " s; ");
  o.note << "n,m <= 3, " << s << " s";
}

void quad_only(Outcome& o) {
  for (int n = 1; n <= 4; ++n)
    for (int m = 1; m <= 4; ++m) {
      auto all = enumerate_tilings(n, m, {TileKind::Quad});
      if (all.size() != 2) {
        o.fail(std::to_string(all.size()) + " quad tilings at " + std::to_string(n) + "x" + std::to_string(m) + "; ");
        continue;
      }
      Tiling turned = all[0];
      for (Tile& t : turned.tiles) t = rotated(t, 1);
      if (!(turned == all[1])) o.fail("pair not related by a quarter turn; ");
    }
  o.note << "n,m <= 4";
}

void bijection(Outcome& o) {
  auto tilings = enumerate_tilings(3, 3);
  if (tilings.size() != 2604) o.fail("expected 2604 tilings; ");
  for (const auto& t : tilings)
    if (!(colouring_to_tiling(tiling_to_colouring(t)) == t)) o.fail("tiling round trip broke; ");
  auto cols = oracle::all_grid_colourings(4, 4);
  if (cols.size() != 2604) o.fail("expected 2604 colourings; ");
  for (const auto& c : cols)
    if (!(tiling_to_colouring(colouring_to_tiling(c)) == c)) o.fail("colouring round trip broke; ");
  o.note << tilings.size() << " tilings, " << cols.size() << " colourings";
}

int find_vertex(const TriMesh& m, Vec3 p, double tol) {
  for (std::size_t i = 0; i < m.vertices.size(); ++i)
    if (norm(m.vertices[i] - p) <= tol) return static_cast<int>(i);
  return -1;
}

void bisquare(Outcome& o) {
  const double h = std::sqrt(2.0) / 2, r2 = std::sqrt(2.0);
  const std::vector<Vec3> ref{{-h, h, 0}, {h, h, 0},  {h, -h, 0},  {-h, -h, 0}, {-h, h, 1}, {0, r2, 1},
                              {h, h, 1},  {h, -h, 1}, {0, -r2, 1}, {-h, -h, 1}, {0, 0, 1}};
  const int faces[18][3] = {{1, 2, 4}, {2, 3, 4}, {5, 6, 7},  {5, 7, 11}, {8, 9, 10}, {8, 10, 11},
                            {4, 9, 10}, {3, 8, 9}, {3, 4, 9},  {1, 4, 11}, {1, 5, 11}, {4, 10, 11},
                            {2, 6, 7},  {1, 5, 6}, {2, 3, 11}, {2, 7, 11}, {3, 8, 11}, {1, 2, 6}};
  Block b = canonical_block("bisquare");
  if (b.mesh.vertices.size() != ref.size()) o.fail("vertex count; ");
  std::vector<int> label;
  for (const auto& p : ref) label.push_back(find_vertex(b.mesh, p, 1e-12));
  if (std::count(label.begin(), label.end(), -1)) {
    o.fail("coordinates differ; ");
    return;
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
  if (b.mesh.faces.size() != 18 || got != want) o.fail("face incidences differ; ");
  if (!is_closed(b.mesh) || euler_characteristic(b.mesh) != 2) o.fail("not a closed sphere; ");
  double v = block_volume(b);
  if (std::abs(v - 2) > 1e-9) o.fail("volume " + std::to_string(v) + "; ");
  o.note << "11 vertices, 18 faces, volume " << v;
}

void rhom(Outcome& o) {
  const double r3 = std::sqrt(3.0), h = std::sqrt(6.0) / 3;
  const std::vector<Vec3> a_ref{{0, 0, 0}, {0.5, r3 / 2, 0}, {1, 0, 0},        {0.5, -r3 / 2, 0}, {0, 0, h},
                                {0.5, r3 / 6, h}, {1, 0, h}, {1, -r3 / 3, h}, {0.5, -r3 / 2, h}, {0, -r3 / 3, h}};
  const std::vector<Vec3> b_ref{{0, 0, 0},        {0.5, r3 / 2, 0},  {1, 0, 0},          {0.5, -r3 / 2, 0},
                                {0, 0, h},        {0.5, r3 / 6, h},  {0.5, r3 / 2, h},   {1, r3 / 3, h},
                                {1, 0, h},        {0.5, -r3 / 6, h}, {0.5, -r3 / 2, h},  {0, -r3 / 3, h}};
  Block a = canonical_block("rhom"), b = canonical_block("rhom_obverse");
  if (a.mesh.vertices.size() != 10 || b.mesh.vertices.size() != 12) o.fail("vertex counts; ");
  for (const auto& p : a_ref)
    if (find_vertex(a.mesh, p, 1e-12) < 0) o.fail("rhom coordinates differ; ");
  for (const auto& p : b_ref)
    if (find_vertex(b.mesh, p, 1e-12) < 0) o.fail("obverse coordinates differ; ");
  double va = block_volume(a), vb = block_volume(b);
  if (std::abs(va - vb) > 1e-9) o.fail("volumes differ; ");
  o.note << "volumes " << va << " and " << vb;
}

bool passes(const Assembly& a, std::uint64_t seed) {
  return verify_space_filling(a, default_z_samples(a.height, 4, seed), 1e-6).pass;
}

void space_filling(Outcome& o) {
  auto t0 = Clock::now();
  for (const auto& name : canonical_block_names()) {
    Block b = canonical_block(name);
    for (int k = 0; k < 20; ++k) {
      double z = b.height * (k + 0.5) / 20;
      if (std::abs(total_area(mesh_cross_section(b.mesh, z)) - b.domain_area) > 1e-9)
        o.fail("cross-section of " + name + " varies; ");
    }
  }
  int tilings = 0, lozenges = 0, snub = 0;
  for (std::uint64_t s = 0; s < 100; ++s) {
    Tiling t = random_tiling(5, 5, {TileKind::Bi, TileKind::Quad}, s);
    if (passes(tiling_to_assembly(t, 1.0, 1), s))
      ++tilings;
    else
      o.fail("tiling seed " + std::to_string(s) + "; ");
  }
  for (std::uint64_t s = 0; s < 20; ++s) {
    auto d = random_decorated_tiling(2, 2, 2, s);
    if (passes(lozenge_assembly(d, canonical_block("rhom").height, true), s))
      ++lozenges;
    else
      o.fail("lozenge seed " + std::to_string(s) + "; ");
  }
  for (SnubVariant v : {SnubVariant::RhomPair, SnubVariant::VersatileTriple}) {
    TilingComplex c = snub_square_complex(2, 1);
    if (passes(complex_assembly(c, snub_square_colouring(c, v), v), 0))
      ++snub;
    else
      o.fail(std::string("snub ") + to_string(v) + "; ");
  }
  double s = seconds_since(t0);
  if (s >= 120.0) o.fail("took " + std::to_string(s) + " s; ");
  o.note << tilings << "/100 tilings, " << lozenges << "/20 lozenge, " << snub << "/2 snub, " << s << " s";
}

void lozenge_counts(Outcome& o) {
  int boxes = 0;
  for (int a = 1; a <= 10; ++a)
    for (int b = 1; b <= 10; ++b)
      for (int c = 1; c <= 10; ++c) {
        if (a * b + b * c + c * a > 20) continue;
        ++boxes;
        if (BigInt(for_each_lozenge_tiling(a, b, c, nullptr)) != count_lozenge_tilings(a, b, c))
          o.fail("mismatch at " + std::to_string(a) + std::to_string(b) + std::to_string(c) + "; ");
      }
  if (count_lozenge_tilings(2, 2, 2) != 20 || enumerate_lozenge_tilings(2, 2, 2).size() != 20) o.fail("(2,2,2) is not 20; ");
  auto frozen = fixed_factor_lozenge_formula(2, 2, 2);
  if (denominator(frozen) == 1) o.fail("frozen-factor product is integral; ");
  o.note << boxes << " boxes; frozen-factor product at (2,2,2) = " << frozen;
}

DeformationCurve random_curve(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> amp(0.05, 0.35);
  switch (rng() % 4) {
    case 0: return DeformationCurve::midpoint_peak(amp(rng));
    case 1: return DeformationCurve::zigzag(amp(rng) * 0.7);
    case 2: return DeformationCurve::quadratic(amp(rng), 12);
    default: return DeformationCurve::polyline({{0.3, amp(rng)}, {0.6, amp(rng) * 0.5}});
  }
}

void escher(Outcome& o) {
  std::mt19937_64 rng(2024);
  int valid = 0, attempts = 0;
  while (valid < 200 && attempts < 5000) {
    ++attempts;
    const auto& name = feasible_groups()[attempts % feasible_groups().size()];
    WallpaperGroup g = make_group(name);
    FundamentalDomain d = canonical_domain(g);
    DeformationAssignment a{name, {}};
    for (int rep : d.pair_reps) {
      PairDeformation p{random_curve(rng), rng() % 2 ? Polarity::Inward : Polarity::Outward};
      if (d.partner[rep] == rep) p.curve = DeformationCurve::zigzag(0.1 + 0.1 * (rng() % 2));
      a.pairs.push_back(p);
    }
    DeformedDomain dd;
    try {
      dd = apply_escher(d, g, a);
    } catch (const Error&) {
      continue;
    }
    ++valid;
    if (std::abs(oracle::shoelace(dd.boundary.points) - oracle::shoelace(d.polygon.vertices)) > 1e-9)
      o.fail("area changed for " + name + "; ");
    Box2 b = bounding_box(d.polygon.vertices);
    double m = std::max(b.x1 - b.x0, b.y1 - b.y0);
    Polygon2 window{{{b.x0 - m, b.y0 - m}, {b.x1 + m, b.y0 - m}, {b.x1 + m, b.y1 + m}, {b.x0 - m, b.y1 + m}}};
    if (!validate_orbit_disjoint(dd, g, window)) o.fail("orbit crosses for " + name + "; ");
  }
  if (valid < 200) o.fail("only " + std::to_string(valid) + " valid assignments; ");
  bool rejected = false;
  try {
    WallpaperGroup g = make_group("p4");
    apply_escher(canonical_domain(g), g, obverse(named_deformation("quadratic_bisquare").assignment, 1));
  } catch (const Error& e) {
    rejected = std::string(e.what()).find("paths intersect") != std::string::npos;
  }
  if (!rejected) o.fail("quadratic configuration not rejected; ");
  o.note << valid << " assignments in " << attempts << " draws";
}

void figure_regression(Outcome& o) {
  Assembly from_tiling = tiling_to_assembly(p4_versatile_tiling(6, 6));
  Assembly orbit = orbit_assembly(make_group("p4"), {"versatile"}, rectangle_window(-0.5, -0.5, 5.5, 5.5));
  if (!same_placements(from_tiling, orbit, 1e-9)) o.fail("tiling and orbit placements differ; ");
  o.note << from_tiling.placements.size() << " placements match; interlocking itself is not checked";
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void(Outcome&)>>> criteria{
      {"table counts", table_counts},
      {"four-way count agreement", four_way},
      {"quad-only tilings", quad_only},
      {"tiling-colouring bijection", bijection},
      {"bisquare block", bisquare},
      {"rhom blocks", rhom},
      {"space filling", space_filling},
      {"lozenge counts", lozenge_counts},
      {"deformation invariants", escher},
      {"versatile orbit regression", figure_regression},
  };
  int failed = 0, k = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      run(o);
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::printf("%s %d %s: %s\n", o.pass ? "PASS" : "FAIL", ++k, name, o.note.str().c_str());
    std::fflush(stdout);
    if (!o.pass) ++failed;
  }
  return failed ? 1 : 0;
}
