#include "tia/assembly.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "random.hpp"

namespace tia {

namespace {

const double kPi = std::acos(-1.0);
const Isometry2 kMirrorX = Isometry2::reflection({0, 0}, {1, 0});

bool is_convex(const Polygon2& p) {
  std::size_t n = p.vertices.size();
  if (n < 3) return false;
  for (std::size_t i = 0; i < n; ++i) {
    Vec2 a = p.vertices[i], b = p.vertices[(i + 1) % n], c = p.vertices[(i + 2) % n];
    if (cross(b - a, c - b) < -1e-12) return false;
  }
  return true;
}

// Sutherland-Hodgman clip of a polygon against a convex counter-clockwise region.
std::vector<Vec2> clip_convex(std::vector<Vec2> poly, const Polygon2& region) {
  std::size_t n = region.vertices.size();
  for (std::size_t e = 0; e < n && !poly.empty(); ++e) {
    Vec2 a = region.vertices[e], b = region.vertices[(e + 1) % n];
    auto side = [&](Vec2 p) { return cross(b - a, p - a); };
    std::vector<Vec2> out;
    for (std::size_t i = 0; i < poly.size(); ++i) {
      Vec2 p = poly[i], q = poly[(i + 1) % poly.size()];
      double sp = side(p), sq = side(q);
      if (sp >= 0) out.push_back(p);
      if ((sp >= 0) != (sq >= 0)) out.push_back(p + (q - p) * (sp / (sp - sq)));
    }
    poly = std::move(out);
  }
  return poly;
}

double seg_point_dist(Vec2 a, Vec2 b, Vec2 p) {
  Vec2 d = b - a;
  double L = dot(d, d);
  double t = L > 0 ? std::clamp(dot(p - a, d) / L, 0.0, 1.0) : 0.0;
  return dist(a + d * t, p);
}

double seg_seg_dist(Vec2 a, Vec2 b, Vec2 c, Vec2 d) {
  double d1 = cross(b - a, c - a), d2 = cross(b - a, d - a), d3 = cross(d - c, a - c), d4 = cross(d - c, b - c);
  if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) && ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0))) return 0;
  return std::min({seg_point_dist(a, b, c), seg_point_dist(a, b, d), seg_point_dist(c, d, a), seg_point_dist(c, d, b)});
}

Isometry2 about_origin(double angle) { return Isometry2::rotation(angle, {0, 0}); }

Isometry2 cell_transform(int quarter_turns, Vec2 centre) {
  return compose(Isometry2::translate(centre), about_origin(quarter_turns * kPi / 2));
}

// Rigid motion taking src[k] to dst[map(k)] for all k, if one exists.
bool fit(const std::vector<Vec2>& src, const std::vector<Vec2>& dst, const std::vector<int>& map, Isometry2& out) {
  Vec2 s = src[1] - src[0], d = dst[map[1]] - dst[map[0]];
  double angle = std::atan2(d.y, d.x) - std::atan2(s.y, s.x);
  Isometry2 g = compose(Isometry2::translate(dst[map[0]]),
                        compose(about_origin(angle), Isometry2::translate(Vec2{} - src[0])));
  for (std::size_t k = 0; k < src.size(); ++k)
    if (!near(g.apply(src[k]), dst[map[k]], 1e-9)) return false;
  out = g;
  return true;
}

std::vector<Vec2> transformed_points(const Isometry2& g, const std::vector<Vec2>& pts) {
  std::vector<Vec2> out;
  for (Vec2 p : pts) out.push_back(g.apply(p));
  return out;
}

}  // namespace

const Block& Assembly::block(const std::string& name) const {
  auto it = cache_.find(name);
  if (it == cache_.end()) it = cache_.emplace(name, std::make_shared<const Block>(canonical_block(name, height))).first;
  return *it->second;
}

TilePlacement tile_block(const Tile& t) {
  switch (t.kind) {
    case TileKind::Bi: return {"versatile", (t.orient + 3) % 4};
    case TileKind::Quad: return {"bisquare_unit", t.orient};
    case TileKind::OctaSym: return {"zigzag_sym", t.orient};
    case TileKind::OctaAsym: return {"zigzag_asym", t.orient};
  }
  throw Error("unknown tile kind");
}

Assembly tiling_to_assembly(const Tiling& t, double h, int ring) {
  std::string v = first_violation(t);
  if (!v.empty()) throw Error("invalid tiling: " + v);
  if (!(h > 0)) throw Error("height must be positive");
  Tiling big = t;
  if (ring > 0) {
    std::vector<TileKind> kinds;
    for (const Tile& x : t.tiles)
      if (std::find(kinds.begin(), kinds.end(), x.kind) == kinds.end()) kinds.push_back(x.kind);
    try {
      big = extend_tiling(t, ring, kinds);
    } catch (const Error&) {
      bool octa = std::any_of(kinds.begin(), kinds.end(),
                              [](TileKind k) { return k == TileKind::OctaSym || k == TileKind::OctaAsym; });
      big = extend_tiling(t, ring, octa ? std::vector<TileKind>{TileKind::OctaSym, TileKind::OctaAsym} : kBiQuad);
    }
  }
  Assembly a;
  a.height = h;
  a.region = rectangle_window(-0.5, -0.5, t.cols - 0.5, t.rows - 0.5);
  for (int R = 0; R < big.rows; ++R)
    for (int C = 0; C < big.cols; ++C) {
      int r = R - ring, c = C - ring;
      TilePlacement tp = tile_block(big.at(R, C));
      Vec2 centre{static_cast<double>(c), static_cast<double>(t.rows - 1 - r)};
      a.placements.push_back({tp.block, cell_transform(tp.quarter_turns, centre), {r, c, 0}});
    }
  return a;
}

TilePlacement lozenge_block(const DecoratedLozenge& d) {
  return {d.split == LozengeSplit::Bi ? "rhom" : "rhom_obverse", 0};
}

Isometry2 lozenge_local_transform(const DecoratedLozenge& d) {
  if (d.orient == 0) return Isometry2::identity();
  if (d.split == LozengeSplit::Bi) return Isometry2::rotation(kPi, {0.5, 0});
  return Isometry2::reflection({0.5, 0}, {0, 1});
}

Assembly lozenge_assembly(const DecoratedLozengeTiling& d, double h, bool pad) {
  std::string v = decoration_violation(d);
  if (!v.empty()) throw Error("invalid decorated tiling: " + v);
  if (!(h > 0)) throw Error("height must be positive");
  DecoratedLozengeTiling use = pad ? pad_decorated(d) : d;
  Assembly a;
  a.height = h;
  a.region = lozenge_hexagon(d.tiling.a, d.tiling.b, d.tiling.c);
  for (std::size_t i = 0; i < use.tiling.lozenges.size(); ++i) {
    const DecoratedLozenge& dec = use.decorations[i];
    Isometry2 g = compose(lozenge_placement(use.tiling.lozenges[i]), lozenge_local_transform(dec));
    a.placements.push_back({lozenge_block(dec).block, g, {static_cast<int>(i), 0, 0}});
  }
  return a;
}

std::vector<std::string> snub_blocks(SnubVariant v, const std::string& kind) {
  if (kind == "square") return {v == SnubVariant::RhomPair ? "shallow_versatile" : "versatile"};
  if (kind == "lozenge")
    return v == SnubVariant::RhomPair ? std::vector<std::string>{"rhom", "rhom_obverse"}
                                      : std::vector<std::string>{"snub_lozenge"};
  throw Error("unknown face kind '" + kind + "'");
}

Assembly complex_assembly(const TilingComplex& c, const ComplexColouring& col, SnubVariant v, double h) {
  std::string bad = complex_violation(c, col);
  if (!bad.empty()) throw Error("invalid complex colouring: " + bad);
  Assembly a;
  a.height = h;
  a.region = c.window;
  for (std::size_t fi = 0; fi < c.faces.size(); ++fi) {
    const ComplexFace& f = c.faces[fi];
    const auto& dst = f.polygon.vertices;
    int n = static_cast<int>(dst.size());
    bool placed = false;
    for (const std::string& name : snub_blocks(v, f.kind)) {
      BlockDomain bd = block_domain(name);
      const auto& src = bd.domain.polygon.vertices;
      if (static_cast<int>(src.size()) != n) continue;
      auto pol = top_polarities(name);
      for (int mirrored = 0; mirrored < 2 && !placed; ++mirrored) {
        std::vector<Vec2> s = mirrored ? transformed_points(kMirrorX, src) : src;
        for (int shift = 0; shift < n && !placed; ++shift) {
          std::vector<int> map(n);
          bool colours_ok = true;
          for (int k = 0; k < n; ++k) {
            map[k] = mirrored ? ((shift - k) % n + n) % n : (k + shift) % n;
            int edge = mirrored ? ((shift - k - 1) % n + n) % n : (k + shift) % n;
            Colour want = pol[k] == Polarity::Inward ? Colour::Black : Colour::White;
            if (col[fi][edge] != want) colours_ok = false;
          }
          Isometry2 g;
          if (!colours_ok || !fit(s, dst, map, g)) continue;
          if (mirrored) g = compose(g, kMirrorX);
          a.placements.push_back({name, g, {static_cast<int>(fi), 0, 0}});
          placed = true;
        }
      }
      if (placed) break;
    }
    if (!placed) throw Error("no block matches face " + std::to_string(fi));
  }
  return a;
}

Polygon2 rectangle_window(double x0, double y0, double x1, double y1) {
  if (!(x1 > x0 && y1 > y0)) throw Error("empty window");
  return {{{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}}};
}

Assembly orbit_assembly(const WallpaperGroup& g, const std::vector<std::string>& blocks, const Polygon2& window,
                        double h, double pad) {
  if (blocks.empty()) throw Error("no block given");
  bool improper = std::any_of(g.cosets.begin(), g.cosets.end(), [](const Isometry2& c) { return !c.proper; });
  if (improper && blocks.size() < 2)
    throw Error("group " + g.name + " has reflections; the mirrored partner block is required");
  BlockDomain bd = block_domain(blocks.front());
  if (bd.group != g.name) throw Error("block '" + blocks.front() + "' is not built on group " + g.name);
  Box2 box = bounding_box(window.vertices);
  Polygon2 grown = rectangle_window(box.x0 - pad, box.y0 - pad, box.x1 + pad, box.y1 + pad);
  if (pad == 0) grown = window;
  Assembly a;
  a.height = h;
  a.region = window;
  for (const auto& copy : orbit_in_window(bd.wallpaper, bd.domain.polygon, grown)) {
    if (copy.g.proper)
      a.placements.push_back({blocks[0], copy.g, copy.index});
    else
      a.placements.push_back({blocks[1], compose(copy.g, kMirrorX), copy.index});
  }
  return a;
}

std::vector<Polygon2> footprint(const Assembly& a, std::size_t i) {
  const Placement& p = a.placements.at(i);
  const Block& b = a.block(p.block);
  std::vector<Polygon2> out;
  for (const auto& poly : b.bottom) out.push_back(transformed(p.transform, poly));
  for (const auto& poly : b.top) out.push_back(transformed(p.transform, poly));
  return out;
}

Assembly select_frame(const Assembly& a) {
  Assembly r = a;
  r.frame.clear();
  const auto& rv = a.region.vertices;
  for (std::size_t i = 0; i < a.placements.size(); ++i) {
    bool touches = false;
    for (const auto& poly : footprint(a, i)) {
      const auto& pv = poly.vertices;
      for (std::size_t k = 0; k < pv.size() && !touches; ++k)
        for (std::size_t e = 0; e < rv.size() && !touches; ++e)
          touches = seg_seg_dist(pv[k], pv[(k + 1) % pv.size()], rv[e], rv[(e + 1) % rv.size()]) <= 1e-9;
      if (touches) break;
    }
    if (touches) r.frame.push_back(static_cast<int>(i));
  }
  return r;
}

std::vector<double> default_z_samples(double h, int extra, std::uint64_t seed) {
  std::vector<double> z{0, 0.25 * h, 0.5 * h, 0.75 * h, h};
  std::mt19937_64 rng(seed);
  for (int i = 0; i < extra; ++i) z.push_back(h * (0.01 + 0.98 * detail::draw_unit(rng)));
  return z;
}

SpaceFillingReport verify_space_filling(const Assembly& a, const std::vector<double>& z_samples, double tol) {
  if (!is_convex(a.region)) throw Error("verification needs a convex counter-clockwise region");
  SpaceFillingReport rep;
  rep.region_area = polygon_area(a.region);
  std::set<std::string> names;
  for (const auto& p : a.placements) names.insert(p.block);
  for (double z : z_samples) {
    if (z < -1e-12 || z > a.height + 1e-12) throw Error("z sample outside the slab");
    std::map<std::string, std::vector<Triangle2>> local;
    for (const auto& n : names) {
      std::vector<Triangle2> tris;
      for (const auto& poly : mesh_cross_section(a.block(n).mesh, std::clamp(z, 0.0, a.height)))
        for (const auto& t : triangulate(poly)) tris.push_back(t);
      local[n] = std::move(tris);
    }
    // Clipped convex pieces per placement.
    std::vector<std::vector<std::vector<Vec2>>> pieces(a.placements.size());
    std::vector<Box2> boxes(a.placements.size());
    double covered = 0;
    for (std::size_t i = 0; i < a.placements.size(); ++i) {
      const Placement& p = a.placements[i];
      std::vector<Vec2> all;
      for (const auto& t : local[p.block]) {
        std::vector<Vec2> tri{p.transform.apply(t[0]), p.transform.apply(t[1]), p.transform.apply(t[2])};
        if (!p.transform.proper) std::swap(tri[1], tri[2]);
        auto c = clip_convex(tri, a.region);
        if (c.size() < 3) continue;
        double ar = signed_area(c);
        if (ar <= 1e-15) continue;
        covered += ar;
        all.insert(all.end(), c.begin(), c.end());
        pieces[i].push_back(std::move(c));
      }
      boxes[i] = all.empty() ? Box2{} : bounding_box(all);
    }
    double worst = 0;
    for (std::size_t i = 0; i < pieces.size(); ++i)
      for (std::size_t j = i + 1; j < pieces.size(); ++j) {
        if (pieces[i].empty() || pieces[j].empty() || !boxes[i].overlaps(boxes[j], 1e-12)) continue;
        double ov = 0;
        for (const auto& pi : pieces[i])
          for (const auto& pj : pieces[j]) ov += convex_intersection_area(pi, pj);
        worst = std::max(worst, ov);
      }
    double deficit = rep.region_area - covered;
    rep.z.push_back(z);
    rep.deficit.push_back(deficit);
    rep.max_overlap.push_back(worst);
    if (std::abs(deficit) > tol * rep.region_area || worst >= tol * rep.region_area) rep.pass = false;
  }
  return rep;
}

TriMesh assembly_mesh(const Assembly& a) {
  TriMesh out;
  for (const auto& p : a.placements) {
    Block b = transformed(p.transform, a.block(p.block));
    int base = static_cast<int>(out.vertices.size());
    out.vertices.insert(out.vertices.end(), b.mesh.vertices.begin(), b.mesh.vertices.end());
    for (auto f : b.mesh.faces) out.faces.push_back({f[0] + base, f[1] + base, f[2] + base});
  }
  return out;
}

bool same_placements(const Assembly& a, const Assembly& b, double tol) {
  if (a.placements.size() != b.placements.size()) return false;
  std::vector<bool> used(b.placements.size(), false);
  for (const auto& p : a.placements) {
    bool found = false;
    for (std::size_t j = 0; j < b.placements.size() && !found; ++j) {
      if (used[j] || b.placements[j].block != p.block) continue;
      if (approx_equal(p.transform, b.placements[j].transform, tol)) found = used[j] = true;
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace tia
