#include "tia/blocks.hpp"

#include <algorithm>
#include <map>

namespace tia {

namespace {

const double kLozengeHeight = std::sqrt(6.0) / 3.0;

class MeshBuilder {
 public:
  int vertex(Vec3 p) {
    for (std::size_t i = 0; i < verts_.size(); ++i) {
      const Vec3& q = verts_[i];
      if (std::abs(p.x - q.x) <= 1e-10 && std::abs(p.y - q.y) <= 1e-10 && std::abs(p.z - q.z) <= 1e-10)
        return static_cast<int>(i);
    }
    verts_.push_back(p);
    return static_cast<int>(verts_.size() - 1);
  }
  void tri(int a, int b, int c) {
    if (a == b || b == c || a == c) return;
    faces_.push_back({a, b, c});
  }
  const Vec3& at(int i) const { return verts_[i]; }

  // Removes coincident faces of opposite orientation (zero-width slits) and unused vertices.
  TriMesh finish() {
    auto canon = [](std::array<int, 3> f) {
      int k = static_cast<int>(std::min_element(f.begin(), f.end()) - f.begin());
      return std::array<int, 3>{f[k], f[(k + 1) % 3], f[(k + 2) % 3]};
    };
    std::map<std::array<int, 3>, int> seen;
    std::vector<bool> dead(faces_.size(), false);
    for (std::size_t i = 0; i < faces_.size(); ++i) {
      auto c = canon(faces_[i]);
      std::array<int, 3> opp{c[0], c[2], c[1]};
      auto it = seen.find(opp);
      if (it != seen.end() && it->second >= 0) {
        dead[i] = true;
        dead[it->second] = true;
        it->second = -1;
        continue;
      }
      seen[c] = static_cast<int>(i);
    }
    TriMesh m;
    std::vector<int> remap(verts_.size(), -1);
    for (std::size_t i = 0; i < faces_.size(); ++i) {
      if (dead[i]) continue;
      std::array<int, 3> f{};
      for (int k = 0; k < 3; ++k) {
        int v = faces_[i][k];
        if (remap[v] < 0) {
          remap[v] = static_cast<int>(m.vertices.size());
          m.vertices.push_back(verts_[v]);
        }
        f[k] = remap[v];
      }
      m.faces.push_back(f);
    }
    return m;
  }

 private:
  std::vector<Vec3> verts_;
  std::vector<std::array<int, 3>> faces_;
};

std::vector<double> arc_params(const std::vector<Vec2>& path) {
  std::vector<double> s{0.0};
  for (std::size_t i = 1; i < path.size(); ++i) s.push_back(s.back() + dist(path[i - 1], path[i]));
  double total = s.back();
  for (double& x : s) x = total > 0 ? x / total : 0.0;
  return s;
}

// Triangulates the ruled strip between a lower and an upper path of one source edge.
// Steps are merged by their parameter midpoints, which keeps the strip identical
// when the edge is traversed in the opposite direction by a neighbouring block.
void zipper(MeshBuilder& mb, const std::vector<Vec2>& lo, double zl, const std::vector<Vec2>& hi, double zh) {
  std::vector<int> b, t;
  for (Vec2 p : lo) b.push_back(mb.vertex({p.x, p.y, zl}));
  for (Vec2 p : hi) t.push_back(mb.vertex({p.x, p.y, zh}));
  auto u = arc_params(lo), w = arc_params(hi);
  std::size_t nb = lo.size() - 1, nt = hi.size() - 1, i = 0, j = 0;
  while (i < nb || j < nt) {
    if (i == nb) {
      mb.tri(b[i], t[j + 1], t[j]);
      ++j;
      continue;
    }
    if (j == nt) {
      mb.tri(b[i], b[i + 1], t[j]);
      ++i;
      continue;
    }
    double ml = (u[i] + u[i + 1]) / 2, mh = (w[j] + w[j + 1]) / 2;
    if (std::abs(ml - mh) <= 1e-12) {
      Vec3 B0 = mb.at(b[i]), B1 = mb.at(b[i + 1]), T0 = mb.at(t[j]), T1 = mb.at(t[j + 1]);
      double d_lo = norm(B1 - T0), d_hi = norm(B0 - T1);
      bool planar = std::abs(dot(B1 - B0, cross(T0 - B0, T1 - B0))) < 1e-12;
      if (planar || d_lo < d_hi - 1e-12) {
        mb.tri(b[i], b[i + 1], t[j]);
        mb.tri(b[i + 1], t[j + 1], t[j]);
      } else if (d_hi < d_lo - 1e-12) {
        mb.tri(b[i], t[j + 1], t[j]);
        mb.tri(b[i], b[i + 1], t[j + 1]);
      } else {
        // Symmetric quad: no diagonal is canonical, so split at its centroid.
        Vec3 c = (B0 + B1 + T0 + T1) * 0.25;
        int ci = mb.vertex(c);
        mb.tri(b[i], b[i + 1], ci);
        mb.tri(b[i + 1], t[j + 1], ci);
        mb.tri(t[j + 1], t[j], ci);
        mb.tri(t[j], b[i], ci);
      }
      ++i;
      ++j;
    } else if (mh < ml) {
      mb.tri(b[i], t[j + 1], t[j]);
      ++j;
    } else {
      mb.tri(b[i], b[i + 1], t[j]);
      ++i;
    }
  }
}

std::vector<Vec2> layer_ring(const LoftLayer& l) {
  std::vector<Vec2> ring;
  for (const auto& p : l.edge_paths) ring.insert(ring.end(), p.begin(), p.end() - 1);
  return ring;
}

void cap(MeshBuilder& mb, const std::vector<Polygon2>& pieces, double z, bool up) {
  for (const auto& piece : pieces) {
    std::vector<int> ids;
    for (Vec2 p : piece.vertices) ids.push_back(mb.vertex({p.x, p.y, z}));
    for (auto t : ear_clip(piece.vertices)) {
      if (up) mb.tri(ids[t[0]], ids[t[1]], ids[t[2]]);
      else mb.tri(ids[t[0]], ids[t[2]], ids[t[1]]);
    }
  }
}

LoftLayer layer_of(const DeformedDomain& d, double z) {
  LoftLayer l;
  l.z = z;
  for (const auto& p : d.edge_paths) l.edge_paths.push_back(p.points);
  return l;
}

void require_same_source(const DeformedDomain& a, const DeformedDomain& b) {
  const auto &va = a.source.polygon.vertices, &vb = b.source.polygon.vertices;
  bool same = va.size() == vb.size() && a.edge_paths.size() == b.edge_paths.size();
  for (std::size_t i = 0; same && i < va.size(); ++i) same = near(va[i], vb[i]);
  if (!same) throw Error("mismatched source domains");
}

void check_walls(const Block& b) {
  // Escher deformations keep every slice's area; a deficit means the walls fold through each other.
  for (double f : {0.25, 0.5, 0.75}) {
    double a = total_area(mesh_cross_section(b.mesh, f * b.height));
    if (std::abs(a - b.domain_area) > 1e-6) throw Error("self-intersecting side walls");
  }
}

}  // namespace

Block loft_layers(const std::vector<LoftLayer>& layers, double domain_area, std::string label) {
  if (layers.size() < 2) throw Error("a loft needs at least two layers");
  std::size_t ne = layers.front().edge_paths.size();
  for (const auto& l : layers)
    if (l.edge_paths.size() != ne) throw Error("mismatched source domains");
  for (std::size_t k = 1; k < layers.size(); ++k)
    if (!(layers[k].z > layers[k - 1].z)) throw Error("layer heights must increase");
  MeshBuilder mb;
  Block blk;
  blk.label = std::move(label);
  blk.domain_area = domain_area;
  blk.height = layers.back().z;
  blk.bottom = ring_to_polygons(layer_ring(layers.front()));
  blk.top = ring_to_polygons(layer_ring(layers.back()));
  for (std::size_t k = 0; k + 1 < layers.size(); ++k)
    for (std::size_t e = 0; e < ne; ++e)
      zipper(mb, layers[k].edge_paths[e], layers[k].z, layers[k + 1].edge_paths[e], layers[k + 1].z);
  cap(mb, blk.bottom, layers.front().z, false);
  cap(mb, blk.top, layers.back().z, true);
  blk.mesh = mb.finish();
  if (!is_closed(blk.mesh)) throw Error("loft produced an open surface");
  return blk;
}

Block loft(const DeformedDomain& bottom, const DeformedDomain& top, double h, std::string label) {
  if (!(h > 0)) throw Error("height must be positive");
  require_same_source(bottom, top);
  Block b = loft_layers({layer_of(bottom, 0), layer_of(top, h)}, polygon_area(bottom.source.polygon), std::move(label));
  check_walls(b);
  return b;
}

Block loft(const Polygon2& bottom, const Polygon2& top, double h, std::string label) {
  if (!(h > 0)) throw Error("height must be positive");
  std::size_t n = bottom.vertices.size();
  if (top.vertices.size() != n || n < 3) throw Error("mismatched source domains");
  LoftLayer lo, hi;
  lo.z = 0;
  hi.z = h;
  for (std::size_t k = 0; k < n; ++k) {
    lo.edge_paths.push_back({bottom.vertices[k], bottom.vertices[(k + 1) % n]});
    hi.edge_paths.push_back({top.vertices[k], top.vertices[(k + 1) % n]});
  }
  return loft_layers({lo, hi}, polygon_area(bottom), std::move(label));
}

Block double_loft(const DeformedDomain& bottom, const DeformedDomain& top, double h, bool through_mid,
                  std::string label) {
  if (!(h > 0)) throw Error("height must be positive");
  require_same_source(bottom, top);
  double area = polygon_area(bottom.source.polygon);
  Block b = through_mid
                ? loft_layers({layer_of(bottom, 0), layer_of(undeformed(bottom.source), h / 2), layer_of(top, h)},
                              area, std::move(label))
                : loft_layers({layer_of(bottom, 0), layer_of(top, h)}, area, std::move(label));
  check_walls(b);
  return b;
}

Block transformed(const Isometry2& g, const Block& b) {
  Block r = b;
  for (auto& v : r.mesh.vertices) {
    Vec2 p = g.apply({v.x, v.y});
    v.x = p.x;
    v.y = p.y;
  }
  if (!g.proper)
    for (auto& f : r.mesh.faces) std::swap(f[1], f[2]);
  for (auto& p : r.bottom) p = transformed(g, p);
  for (auto& p : r.top) p = transformed(g, p);
  return r;
}

double block_volume(const Block& b) { return mesh_volume(b.mesh); }

namespace {

double default_height(const std::string& group) { return group == "p3" ? kLozengeHeight : 1.0; }

Block from_named(const std::string& deformation, const std::string& label, double h) {
  NamedDeformation n = named_deformation(deformation);
  DeformedDomain dd = build_named(deformation);
  if (h <= 0) h = default_height(n.group);
  return loft(undeformed(dd.source), dd, h, label);
}

const Isometry2 kFlipY = Isometry2::reflection({0, 0}, {1, 0});

const std::map<std::string, std::string>& simple_blocks() {
  // block name -> deformation name
  static const std::map<std::string, std::string> m{
      {"versatile", "versatile"},
      {"bisquare", "bisquare"},
      {"bisquare_unit", "bisquare_unit"},
      {"rhom", "rhom"},
      {"rhom_obverse", "rhom_obverse"},
      {"shallow_versatile", "shallow_versatile"},
      {"snub_lozenge", "snub_lozenge"},
      {"p6_versatile", "p6_versatile"},
      {"p6_bilozenge", "p6_bilozenge"},
      {"zigzag_sym", "zigzag_sym"},
      {"zigzag_asym", "zigzag_asym"},
      {"p1p2_zigzag", "p1p2_zigzag"},
      {"p1p2_zigzag_obverse", "p1p2_zigzag_obverse"},
      {"p2_zigzag", "p2_zigzag"},
      {"pg_a", "pg"},
      {"p2gg_a", "p2gg"},
      {"abeille", "abeille"},
      {"abeille_obverse", "abeille_obverse"},
      {"quadratic_bisquare", "quadratic_bisquare"},
  };
  return m;
}

}  // namespace

const std::vector<std::string>& canonical_block_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v{"cube"};
    for (const auto& [k, _] : simple_blocks()) v.push_back(k);
    for (const char* s : {"pg_b", "p2gg_b", "double_versatile", "double_versatile_bisquare", "double_abeille"})
      v.push_back(s);
    std::sort(v.begin(), v.end());
    return v;
  }();
  return names;
}

Block canonical_block(const std::string& name, double height) {
  auto it = simple_blocks().find(name);
  if (it != simple_blocks().end()) return from_named(it->second, name, height);
  double h = height > 0 ? height : 1.0;
  if (name == "cube") {
    Polygon2 sq{{{0.5, -0.5}, {0.5, 0.5}, {-0.5, 0.5}, {-0.5, -0.5}}};
    return loft(sq, sq, h, name);
  }
  if (name == "pg_b" || name == "p2gg_b") {
    Block a = canonical_block(name == "pg_b" ? "pg_a" : "p2gg_a", height);
    Block b = transformed(kFlipY, a);
    b.label = name;
    return b;
  }
  if (name == "double_versatile")
    return double_loft(build_named("versatile"), build_named("versatile_half_turn"), h, true, name);
  if (name == "double_versatile_bisquare")
    return double_loft(build_named("versatile"), build_named("bisquare_unit"), h, true, name);
  if (name == "double_abeille")
    return double_loft(build_named("abeille"), build_named("abeille_quarter_turn"), h, true, name);
  throw Error("unknown block '" + name + "'");
}

std::vector<Block> canonical_block_set(const std::string& name) {
  static const std::map<std::string, std::vector<std::string>> sets{
      {"pg_pair", {"pg_a", "pg_b"}},
      {"p2gg_pair", {"p2gg_a", "p2gg_b"}},
      {"rhom_pair", {"rhom", "rhom_obverse"}},
      {"abeille_pair", {"abeille", "abeille_obverse"}},
      {"p1p2_zigzag_pair", {"p1p2_zigzag", "p1p2_zigzag_obverse"}},
      {"p6_pair", {"p6_versatile", "p6_bilozenge"}},
      {"versatile_bisquare", {"versatile", "bisquare_unit"}},
      {"octa", {"zigzag_sym", "zigzag_asym"}},
  };
  auto it = sets.find(name);
  if (it == sets.end()) {
    if (std::find(canonical_block_names().begin(), canonical_block_names().end(), name) ==
        canonical_block_names().end())
      throw Error("unknown block set '" + name + "'");
    return {canonical_block(name)};
  }
  std::vector<Block> out;
  for (const auto& n : it->second) out.push_back(canonical_block(n));
  return out;
}

Isometry2 pair_alignment(const std::string& set_name) {
  if (set_name == "pg_pair" || set_name == "p2gg_pair") return kFlipY;
  throw Error("'" + set_name + "' is not a reflected pair");
}

BlockDomain block_domain(const std::string& name) {
  std::string deformation;
  auto it = simple_blocks().find(name);
  if (it != simple_blocks().end()) deformation = it->second;
  else if (name == "pg_b") deformation = "pg";
  else if (name == "p2gg_b") deformation = "p2gg";
  else if (name == "cube" || name == "double_versatile" || name == "double_versatile_bisquare" ||
           name == "double_abeille")
    deformation = "versatile";
  else
    throw Error("unknown block '" + name + "'");
  NamedDeformation n = named_deformation(deformation);
  BlockDomain out;
  out.group = n.group;
  out.wallpaper = scaled(make_group(n.group), n.scale);
  out.domain = scaled(canonical_domain(make_group(n.group)), n.scale);
  out.deformation = name == "cube" ? "" : deformation;
  return out;
}

std::vector<Polarity> top_polarities(const std::string& name) {
  auto it = simple_blocks().find(name);
  if (it == simple_blocks().end()) throw Error("block '" + name + "' has no single top deformation");
  DeformedDomain dd = build_named(it->second);
  std::vector<Polarity> out;
  for (std::size_t k = 0; k < dd.edge_paths.size(); ++k)
    out.push_back(classify_polarity(dd.edge_paths[k], static_cast<int>(k), dd.source));
  return out;
}

Block block_from_assignment(const NamedDeformation& n, double h) {
  if (!(n.scale > 0)) throw Error("domain scale must be positive");
  if (!(h > 0)) throw Error("height must be positive");
  WallpaperGroup g = scaled(make_group(n.group), n.scale);
  FundamentalDomain d = scaled(canonical_domain(make_group(n.group)), n.scale);
  DeformedDomain dd = apply_escher(d, g, n.assignment);
  return loft(undeformed(d), dd, h, "assignment");
}

}  // namespace tia
