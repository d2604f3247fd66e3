#include "tia/escher.hpp"

#include <algorithm>
#include <map>

namespace tia {

namespace {
const double kRt3 = std::sqrt(3.0);
}

const char* to_string(Polarity p) { return p == Polarity::Inward ? "inward" : "outward"; }

std::vector<Vec2> DeformationCurve::local_points() const {
  std::vector<Vec2> pts{{0, 0}};
  if (kind == Kind::Quadratic) {
    double apex = control.empty() ? 0.0 : control.front().y;
    for (int i = 1; i < samples; ++i) {
      double t = static_cast<double>(i) / samples;
      pts.push_back({t, 4 * apex * t * (1 - t)});
    }
  } else {
    pts.insert(pts.end(), control.begin(), control.end());
  }
  pts.push_back({1, 0});
  return pts;
}

DeformationCurve DeformationCurve::midpoint_peak(double amplitude) {
  return polyline({{0.5, amplitude}});
}

DeformationCurve DeformationCurve::endpoint_peak(double amplitude, bool at_end) {
  return polyline({{at_end ? 1.0 : 0.0, amplitude}});
}

DeformationCurve DeformationCurve::zigzag(double amplitude) {
  return polyline({{0.25, amplitude}, {0.75, -amplitude}});
}

DeformationCurve DeformationCurve::quadratic(double amplitude, int samples) {
  if (samples < 2) throw Error("quadratic curve needs at least 2 segments");
  DeformationCurve c;
  c.kind = Kind::Quadratic;
  c.control = {{0.5, amplitude}};
  c.samples = samples;
  return c;
}

DeformationCurve DeformationCurve::polyline(std::vector<Vec2> interior) {
  DeformationCurve c;
  c.kind = Kind::Polyline;
  c.control = std::move(interior);
  return c;
}

Polyline2 curve_on_edge(const DeformationCurve& c, Polarity p, const FundamentalDomain& d, int k) {
  Vec2 a = d.edge_start(k), b = d.edge_end(k);
  Vec2 dir = b - a;
  double len = norm(dir);
  Vec2 n = left_normal(dir);  // interior side of a counter-clockwise polygon
  double sign = p == Polarity::Inward ? 1.0 : -1.0;
  Polyline2 out;
  auto local = c.local_points();
  for (Vec2 q : local) out.points.push_back(a + dir * q.x + n * (sign * q.y * len));
  out.points.front() = a;
  out.points.back() = b;
  return out;
}

Polarity classify_polarity(const Polyline2& path, int edge, const FundamentalDomain& d) {
  Vec2 a = d.edge_start(edge), b = d.edge_end(edge);
  Vec2 n = left_normal(b - a);
  for (Vec2 p : path.points) {
    double off = dot(p - a, n);
    if (std::abs(off) > 1e-12) return off > 0 ? Polarity::Inward : Polarity::Outward;
  }
  throw Error("undeformed edge");
}

DeformedDomain undeformed(const FundamentalDomain& d) {
  DeformedDomain dd;
  dd.source = d;
  for (std::size_t k = 0; k < d.edges.size(); ++k) {
    int i = static_cast<int>(k);
    dd.edge_paths.push_back({{d.edge_start(i), d.edge_end(i)}, false});
  }
  dd.boundary = {d.polygon.vertices, true};
  return dd;
}

std::vector<Polygon2> DeformedDomain::pieces() const { return ring_to_polygons(boundary.points); }

DeformedDomain apply_escher(const FundamentalDomain& d, const WallpaperGroup& g,
                            const DeformationAssignment& a) {
  if (a.pairs.size() != d.pair_reps.size())
    throw Error("assignment must give one deformation per edge pair (" + std::to_string(d.pair_reps.size()) + ")");
  if (edge_fixed_by_reflection(g, d)) throw Error("an edge is fixed by a reflection and cannot be deformed");
  DeformedDomain dd;
  dd.source = d;
  dd.assignment = a;
  dd.edge_paths.resize(d.edges.size());
  for (std::size_t p = 0; p < d.pair_reps.size(); ++p) {
    int rep = d.pair_reps[p];
    int q = d.partner[rep];
    const Isometry2& h = d.pairing[rep];
    Polyline2 path = curve_on_edge(a.pairs[p].curve, a.pairs[p].polarity, d, rep);
    Polyline2 img = transformed(h, path);
    if (h.proper) std::reverse(img.points.begin(), img.points.end());
    img.points.front() = d.edge_start(q);
    img.points.back() = d.edge_end(q);
    if (q == rep) {
      bool same = img.points.size() == path.points.size();
      for (std::size_t i = 0; same && i < path.points.size(); ++i) same = near(img.points[i], path.points[i]);
      if (!same) throw Error("deformation not compatible with self-paired edge " + d.edge_names[rep]);
    }
    dd.edge_paths[rep] = path;
    dd.edge_paths[q] = img;
  }
  dd.boundary.closed = true;
  for (const auto& path : dd.edge_paths)
    dd.boundary.points.insert(dd.boundary.points.end(), path.points.begin(), path.points.end() - 1);

  if (polyline_self_crosses(dd.boundary)) throw Error("deformation paths intersect");
  if (std::abs(dd.area() - polygon_area(d.polygon)) > 1e-9) throw Error("deformed boundary is not simple");
  Box2 b = bounding_box(dd.boundary.points);
  double pad = std::max(b.x1 - b.x0, b.y1 - b.y0);
  Polygon2 window{{{b.x0 - pad, b.y0 - pad}, {b.x1 + pad, b.y0 - pad}, {b.x1 + pad, b.y1 + pad}, {b.x0 - pad, b.y1 + pad}}};
  if (!validate_orbit_disjoint(dd, g, window)) throw Error("deformation paths intersect");
  return dd;
}

DeformationAssignment obverse(const DeformationAssignment& a, std::size_t pair) {
  if (pair >= a.pairs.size()) throw Error("no such edge pair");
  DeformationAssignment r = a;
  r.pairs[pair].polarity = flipped(r.pairs[pair].polarity);
  return r;
}

bool validate_orbit_disjoint(const DeformedDomain& dd, const WallpaperGroup& g, const Polygon2& window) {
  auto copies = orbit_near(g, dd.boundary.points, bounding_box(window.vertices));
  std::vector<Polyline2> curves;
  std::vector<Box2> boxes;
  for (const auto& c : copies) {
    curves.push_back(transformed(c.g, dd.boundary));
    boxes.push_back(bounding_box(curves.back().points));
  }
  for (std::size_t i = 0; i < curves.size(); ++i)
    for (std::size_t j = i + 1; j < curves.size(); ++j) {
      if (!boxes[i].overlaps(boxes[j], 1e-9)) continue;
      if (polylines_cross(curves[i], curves[j])) return false;
    }
  return true;
}

// ---- named assignments ----

namespace {

using DC = DeformationCurve;
constexpr Polarity In = Polarity::Inward;
constexpr Polarity Out = Polarity::Outward;

NamedDeformation make(std::string group, std::vector<PairDeformation> pairs, double scale = 1.0) {
  NamedDeformation n;
  n.group = group;
  n.scale = scale;
  n.assignment.group = std::move(group);
  n.assignment.pairs = std::move(pairs);
  return n;
}

const std::map<std::string, NamedDeformation>& table() {
  static const std::map<std::string, NamedDeformation> t = [] {
    std::map<std::string, NamedDeformation> m;
    const DC mid = DC::midpoint_peak(0.5);
    // Square pairs are listed as (bottom/left pair, right/top pair).
    m["versatile"] = make("p4", {{mid, In}, {mid, In}});
    m["versatile_half_turn"] = make("p4", {{mid, Out}, {mid, Out}});
    // Tip-free variant used by grid tilings: bottom and top bulge inwards.
    m["bisquare_unit"] = make("p4", {{mid, In}, {mid, Out}});
    // Reference orientation with left and right pushed to the centre, side sqrt(2).
    m["bisquare"] = make("p4", {{mid, Out}, {mid, In}}, std::sqrt(2.0));
    const DC lz = DC::midpoint_peak(kRt3 / 6);
    m["rhom"] = make("p3", {{lz, In}, {lz, In}});
    m["rhom_obverse"] = make("p3", {{lz, In}, {lz, Out}});
    // Square partner of the Rhom lozenge in the snub square tiling.
    m["shallow_versatile"] = make("p4", {{lz, In}, {lz, In}});
    // Lozenge partner of the Versatile square there: opposite edges pushed in by half an edge.
    m["snub_lozenge"] = make("p3", {{mid, In}, {mid, Out}});
    m["p6_versatile"] = make("p6", {{DC::midpoint_peak(kRt3 / 6), In}, {DC::midpoint_peak(kRt3 / 2), In}});
    m["p6_bilozenge"] = make("p6", {{DC::midpoint_peak(kRt3 / 6), In}, {DC::midpoint_peak(kRt3 / 2), Out}});
    const DC zz = DC::zigzag(0.25);
    m["zigzag_sym"] = make("p4", {{zz, In}, {zz, In}});
    m["zigzag_asym"] = make("p4", {{zz, Out}, {zz, In}});
    m["p1p2_zigzag"] = make("p1", {{zz, In}, {zz, In}});
    m["p1p2_zigzag_obverse"] = make("p1", {{zz, In}, {zz, Out}});
    m["p2_zigzag"] = make("p2", {{zz, In}, {zz, In}, {zz, In}, {zz, In}});
    m["pg"] = make("pg", {{zz, In}, {zz, In}});
    m["pg_obverse"] = make("pg", {{zz, In}, {zz, Out}});
    m["p2gg"] = make("p2gg", {{DC::midpoint_peak(0.25), In}, {DC::endpoint_peak(0.25), Out}});
    const DC qa = DC::quadratic(0.2);
    m["abeille"] = make("p4", {{qa, In}, {qa, Out}});
    m["abeille_obverse"] = make("p4", {{qa, In}, {qa, In}});
    m["abeille_quarter_turn"] = make("p4", {{qa, Out}, {qa, In}});
    const DC q5 = DC::quadratic(0.5);
    m["quadratic_bisquare"] = make("p4", {{q5, In}, {q5, Out}});
    m["quadratic_versatile"] = make("p4", {{q5, In}, {q5, In}});
    return m;
  }();
  return t;
}

}  // namespace

NamedDeformation named_deformation(const std::string& name) {
  auto it = table().find(name);
  if (it == table().end()) throw Error("unknown deformation '" + name + "'");
  return it->second;
}

const std::vector<std::string>& named_deformations() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [k, _] : table()) v.push_back(k);
    return v;
  }();
  return names;
}

DeformedDomain build_named(const std::string& name) {
  NamedDeformation n = named_deformation(name);
  WallpaperGroup g = scaled(make_group(n.group), n.scale);
  FundamentalDomain d = scaled(canonical_domain(make_group(n.group)), n.scale);
  return apply_escher(d, g, n.assignment);
}

}  // namespace tia
