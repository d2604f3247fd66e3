#include "tia/wallpaper.hpp"

#include <algorithm>
#include <numbers>

namespace tia {

namespace {

constexpr double kPi = std::numbers::pi;
const double kRt3 = std::sqrt(3.0);

Isometry2 rot_deg(double deg, Vec2 c = {}) { return Isometry2::rotation(deg * kPi / 180.0, c); }

Polygon2 rect(double x0, double y0, double x1, double y1) {
  return {{{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}}};
}

Polygon2 hexagon(double r, double start_deg) {
  Polygon2 p;
  for (int k = 0; k < 6; ++k) {
    double a = (start_deg + 60.0 * k) * kPi / 180.0;
    p.vertices.push_back({r * std::cos(a), r * std::sin(a)});
  }
  return p;
}

// Unit square stored counter-clockwise from the lower-right corner.
FundamentalDomain unit_square() {
  FundamentalDomain d;
  d.polygon = {{{0.5, -0.5}, {0.5, 0.5}, {-0.5, 0.5}, {-0.5, -0.5}}};
  d.edge_names = {"e4", "e3", "e2", "e1"};
  return d;
}

void finish_edges(FundamentalDomain& d) {
  int n = static_cast<int>(d.polygon.vertices.size());
  d.edges.clear();
  for (int k = 0; k < n; ++k) d.edges.push_back({k, (k + 1) % n});
  d.partner.assign(n, -1);
  d.pairing.assign(n, Isometry2::identity());
}

void pair_edges(FundamentalDomain& d, int rep, int partner, const Isometry2& g) {
  d.partner[rep] = partner;
  d.pairing[rep] = g;
  if (partner != rep) {
    d.partner[partner] = rep;
    d.pairing[partner] = inverse(g);
  }
  d.pair_reps.push_back(rep);
}

}  // namespace

const std::vector<std::string>& feasible_groups() {
  static const std::vector<std::string> names{"p1", "p2", "pg", "p2gg", "p3", "p4", "p6"};
  return names;
}

WallpaperGroup make_group(const std::string& name) {
  WallpaperGroup g;
  g.name = name;
  const Isometry2 id = Isometry2::identity();
  if (name == "p1") {
    g.t1 = {1, 0};
    g.t2 = {0, 1};
    g.cosets = {id};
  } else if (name == "p2") {
    // Half-turns about the edge midpoints of the unit square.
    g.t1 = {1, 1};
    g.t2 = {1, -1};
    g.cosets = {id, rot_deg(180, {0.5, 0})};
    for (Vec2 c : {Vec2{0.5, 0}, Vec2{0, 0.5}, Vec2{-0.5, 0}, Vec2{0, -0.5}})
      g.generators.push_back(rot_deg(180, c));
  } else if (name == "pg") {
    g.t1 = {1, 0};
    g.t2 = {0, 2};
    Isometry2 glide = Isometry2::glide({0, 0}, {0, 1}, 1);
    g.cosets = {id, glide};
    g.generators = {glide};
  } else if (name == "p2gg") {
    g.t1 = {2, 0};
    g.t2 = {0, 2};
    Isometry2 g1 = Isometry2::glide({0, 0}, {0, 1}, 1);   // (x,y) -> (-x, y+1)
    Isometry2 g2 = Isometry2::glide({0, 0}, {1, 0}, -1);  // (x,y) -> (x-1, -y)
    g.cosets = {id, g1, g2, compose(g1, g2)};
    g.generators = {g1, g2};
  } else if (name == "p3") {
    g.t1 = {1.5, kRt3 / 2};
    g.t2 = {0, kRt3};
    g.cosets = {id, rot_deg(120), rot_deg(240)};
    g.generators = {rot_deg(120)};
  } else if (name == "p4") {
    // Four-fold centres sit at the square's corners v2 and v4.
    Vec2 c{-0.5, -0.5};
    g.t1 = {2, 0};
    g.t2 = {0, 2};
    g.cosets = {id, rot_deg(90, c), rot_deg(180, c), rot_deg(270, c)};
    g.generators = {rot_deg(90, c)};
  } else if (name == "p6") {
    g.t1 = {2 * kRt3, 0};
    g.t2 = {kRt3, 3};
    for (int k = 0; k < 6; ++k) g.cosets.push_back(rot_deg(60.0 * k));
    g.generators = {rot_deg(60)};
  } else {
    throw Error("wallpaper group '" + name + "' is unknown or does not admit interlocking blocks");
  }
  g.generators.push_back(Isometry2::translate(g.t1));
  g.generators.push_back(Isometry2::translate(g.t2));
  return g;
}

WallpaperGroup scaled(const WallpaperGroup& g, double f) {
  WallpaperGroup r = g;
  r.t1 = g.t1 * f;
  r.t2 = g.t2 * f;
  for (auto& x : r.generators) x.translation = x.translation * f;
  for (auto& x : r.cosets) x.translation = x.translation * f;
  return r;
}

int FundamentalDomain::pair_of(int edge) const {
  for (std::size_t p = 0; p < pair_reps.size(); ++p)
    if (pair_reps[p] == edge || partner[pair_reps[p]] == edge) return static_cast<int>(p);
  throw Error("edge has no pair");
}

FundamentalDomain canonical_domain(const WallpaperGroup& g) {
  FundamentalDomain d;
  const std::string& n = g.name;
  if (n == "p1" || n == "p2" || n == "pg" || n == "p2gg" || n == "p4") {
    d = unit_square();
    finish_edges(d);
    // Edge indices: 0 right, 1 top, 2 left, 3 bottom.
    if (n == "p1") {
      pair_edges(d, 3, 1, Isometry2::translate({0, 1}));
      pair_edges(d, 0, 2, Isometry2::translate({-1, 0}));
    } else if (n == "p2") {
      pair_edges(d, 3, 3, rot_deg(180, {0, -0.5}));
      pair_edges(d, 0, 0, rot_deg(180, {0.5, 0}));
      pair_edges(d, 1, 1, rot_deg(180, {0, 0.5}));
      pair_edges(d, 2, 2, rot_deg(180, {-0.5, 0}));
    } else if (n == "pg") {
      pair_edges(d, 3, 1, Isometry2::glide({0, 0}, {0, 1}, 1));
      pair_edges(d, 0, 2, Isometry2::translate({-1, 0}));
    } else if (n == "p2gg") {
      pair_edges(d, 3, 1, Isometry2::glide({0, 0}, {0, 1}, 1));
      pair_edges(d, 0, 2, Isometry2::glide({0, 0}, {1, 0}, -1));
    } else {
      pair_edges(d, 3, 2, rot_deg(90, {-0.5, -0.5}));
      pair_edges(d, 0, 1, rot_deg(-90, {0.5, 0.5}));
    }
  } else if (n == "p3") {
    d.polygon = {{{0, 0}, {0.5, -kRt3 / 2}, {1, 0}, {0.5, kRt3 / 2}}};
    d.edge_names = {"e_d", "e_c", "e_b", "e_a"};
    finish_edges(d);
    pair_edges(d, 3, 0, rot_deg(-120));
    pair_edges(d, 2, 1, rot_deg(120, {1, 0}));
  } else if (n == "p6") {
    d.polygon = {{{0, 0}, {kRt3 / 2, 1.5}, {0, 2}, {-kRt3 / 2, 1.5}}};
    d.edge_names = {"long_a", "short_a", "short_b", "long_b"};
    finish_edges(d);
    pair_edges(d, 0, 3, rot_deg(60));
    pair_edges(d, 1, 2, rot_deg(-120, {0, 2}));
  } else {
    throw Error("no canonical domain for group '" + n + "'");
  }
  return d;
}

FundamentalDomain scaled(const FundamentalDomain& d, double f) {
  FundamentalDomain r = d;
  for (auto& v : r.polygon.vertices) v = v * f;
  for (auto& g : r.pairing) g.translation = g.translation * f;
  return r;
}

bool pairing_consistent(const FundamentalDomain& d, double tol) {
  int n = static_cast<int>(d.edges.size());
  for (int k = 0; k < n; ++k) {
    int p = d.partner[k];
    if (p < 0 || p >= n || d.partner[p] != k) return false;
    const Isometry2& g = d.pairing[k];
    Vec2 a = g.apply(d.edge_start(k)), b = g.apply(d.edge_end(k));
    // Rotations and translations reverse the traversal direction, reflections keep it.
    Vec2 ea = g.proper ? d.edge_end(p) : d.edge_start(p);
    Vec2 eb = g.proper ? d.edge_start(p) : d.edge_end(p);
    if (!near(a, ea, tol) || !near(b, eb, tol)) return false;
    if (!approx_equal(d.pairing[p], inverse(g), tol)) return false;
  }
  return true;
}

Polygon2 translation_cell(const WallpaperGroup& g) {
  const std::string& n = g.name;
  double f = norm(g.t1) / norm(make_group(n).t1);
  Polygon2 p;
  if (n == "p1") p = rect(-0.5, -0.5, 0.5, 0.5);
  else if (n == "p2") p = rect(-0.5, -0.5, 1.5, 0.5);
  else if (n == "pg") p = rect(-0.5, -0.5, 0.5, 1.5);
  else if (n == "p2gg") p = rect(-0.5, -0.5, 1.5, 1.5);
  else if (n == "p4") p = rect(-1.5, -1.5, 0.5, 0.5);
  else if (n == "p3") p = hexagon(1, 0);
  else if (n == "p6") p = hexagon(2, 30);
  else throw Error("unknown group");
  for (auto& v : p.vertices) v = v * f;
  return p;
}

std::vector<OrbitCopy> orbit_near(const WallpaperGroup& g, const std::vector<Vec2>& shape,
                                  const Box2& box) {
  double det = cross(g.t1, g.t2);
  auto lattice = [&](Vec2 t) {
    return Vec2{cross(t, g.t2) / det, cross(g.t1, t) / det};
  };
  std::vector<OrbitCopy> out;
  for (std::size_t k = 0; k < g.cosets.size(); ++k) {
    std::vector<Vec2> img;
    for (Vec2 p : shape) img.push_back(g.cosets[k].apply(p));
    Box2 b = bounding_box(img);
    // Translations that can bring the image's box onto the target box.
    double tx0 = box.x0 - b.x1, tx1 = box.x1 - b.x0, ty0 = box.y0 - b.y1, ty1 = box.y1 - b.y0;
    double i0 = 1e300, i1 = -1e300, j0 = 1e300, j1 = -1e300;
    for (Vec2 c : {Vec2{tx0, ty0}, Vec2{tx1, ty0}, Vec2{tx0, ty1}, Vec2{tx1, ty1}}) {
      Vec2 l = lattice(c);
      i0 = std::min(i0, l.x);
      i1 = std::max(i1, l.x);
      j0 = std::min(j0, l.y);
      j1 = std::max(j1, l.y);
    }
    for (int i = (int)std::floor(i0) - 1; i <= (int)std::ceil(i1) + 1; ++i)
      for (int j = (int)std::floor(j0) - 1; j <= (int)std::ceil(j1) + 1; ++j) {
        Vec2 t = g.t1 * i + g.t2 * j;
        Box2 tb{b.x0 + t.x, b.y0 + t.y, b.x1 + t.x, b.y1 + t.y};
        if (!tb.overlaps(box, 1e-12)) continue;
        OrbitCopy c;
        c.g = compose(Isometry2::translate(t), g.cosets[k]);
        c.index = {i, j, static_cast<int>(k)};
        out.push_back(c);
      }
  }
  std::sort(out.begin(), out.end(), [](const OrbitCopy& a, const OrbitCopy& b) { return a.index < b.index; });
  return out;
}

std::vector<OrbitCopy> orbit_in_window(const WallpaperGroup& g, const Polygon2& shape,
                                       const Polygon2& window) {
  std::vector<OrbitCopy> out;
  auto wt = triangulate(window);
  for (auto& c : orbit_near(g, shape.vertices, bounding_box(window.vertices))) {
    c.polygon = transformed(c.g, shape);
    if (overlap_area(triangulate(c.polygon), wt) > 1e-9) out.push_back(std::move(c));
  }
  return out;
}

bool has_rotation_of_order(const WallpaperGroup& g, int order) {
  double c = std::cos(2 * kPi / order), s = std::sin(2 * kPi / order);
  for (const auto& x : g.cosets)
    if (x.proper && std::abs(x.linear[0] - c) < 1e-12 && std::abs(std::abs(x.linear[2]) - s) < 1e-12)
      return true;
  return false;
}

bool has_glide(const WallpaperGroup& g) {
  for (const auto& x : g.cosets) {
    if (x.proper) continue;
    Isometry2 sq = compose(x, x);
    if (norm(sq.translation) > 1e-9) return true;
  }
  return false;
}

bool edge_fixed_by_reflection(const WallpaperGroup& g, const FundamentalDomain& d) {
  for (const auto& c : g.cosets) {
    if (c.proper) continue;
    for (int i = -2; i <= 2; ++i)
      for (int j = -2; j <= 2; ++j) {
        Isometry2 x = compose(Isometry2::translate(g.t1 * i + g.t2 * j), c);
        for (std::size_t k = 0; k < d.edges.size(); ++k)
          if (near(x.apply(d.edge_start(k)), d.edge_start(k)) && near(x.apply(d.edge_end(k)), d.edge_end(k)))
            return true;
      }
  }
  return false;
}

}  // namespace tia
