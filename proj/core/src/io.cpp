#include "tia/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace tia {

using nlohmann::json;

namespace {

json parse(const std::string& text, const char* what) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(std::string("malformed ") + what + " JSON: " + e.what());
  }
  if (!j.is_object()) throw Error(std::string(what) + " JSON must be an object");
  return j;
}

template <class T>
T field(const json& j, const char* key, const char* what) {
  if (!j.is_object() || !j.contains(key)) throw Error(std::string(what) + " is missing \"" + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw Error(std::string(what) + " field \"" + key + "\" has the wrong type");
  }
}

std::string num(double x) {
  if (std::abs(x) < 5e-16) x = 0;  // no "-0" in output
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

json points_json(const std::vector<Vec2>& pts) {
  json a = json::array();
  for (Vec2 p : pts) a.push_back({p.x, p.y});
  return a;
}

std::vector<Vec2> points_from(const json& a, const char* what) {
  if (!a.is_array()) throw Error(std::string(what) + " must be a list of points");
  std::vector<Vec2> out;
  for (const auto& p : a) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number())
      throw Error(std::string(what) + " points must be [x, y] pairs");
    out.push_back({p[0].get<double>(), p[1].get<double>()});
  }
  return out;
}

std::string svg_path(const std::vector<Vec2>& pts) {
  std::string d;
  for (std::size_t i = 0; i < pts.size(); ++i) d += (i ? " L" : "M") + num(pts[i].x) + " " + num(-pts[i].y);
  return d + " Z";
}

std::string svg_open(const Box2& b, double margin) {
  std::ostringstream s;
  double w = b.x1 - b.x0 + 2 * margin, h = b.y1 - b.y0 + 2 * margin;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << num(b.x0 - margin) << " " << num(-b.y1 - margin)
    << " " << num(w) << " " << num(h) << "\" width=\"" << num(w * 60) << "\" height=\"" << num(h * 60) << "\">\n";
  return s.str();
}

}  // namespace

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << text;
  if (!out) throw Error("write to '" + path + "' failed");
}

std::string tiling_to_json(const Tiling& t) {
  json rows = json::array();
  for (int r = 0; r < t.rows; ++r) {
    json row = json::array();
    for (int c = 0; c < t.cols; ++c) row.push_back({{"kind", to_string(t.at(r, c).kind)}, {"orient", t.at(r, c).orient}});
    rows.push_back(row);
  }
  return json{{"rows", t.rows}, {"cols", t.cols}, {"tiles", rows}}.dump();
}

namespace {
Tiling tiling_from_json_unguarded(const std::string& text) {
  json j = parse(text, "tiling");
  int n = field<int>(j, "rows", "tiling"), m = field<int>(j, "cols", "tiling");
  if (n < 1 || m < 1) throw Error("tiling dimensions must be positive");
  const json& rows = j.contains("tiles") ? j["tiles"] : json();
  if (!rows.is_array() || static_cast<int>(rows.size()) != n) throw Error("tiling needs one tile row per row");
  Tiling t(n, m);
  for (int r = 0; r < n; ++r) {
    if (!rows[r].is_array() || static_cast<int>(rows[r].size()) != m)
      throw Error("tile row " + std::to_string(r) + " must have " + std::to_string(m) + " tiles");
    for (int c = 0; c < m; ++c) {
      const json& x = rows[r][c];
      Tile tile{parse_tile_kind(field<std::string>(x, "kind", "tile")), field<int>(x, "orient", "tile")};
      if (tile.orient < 0 || tile.orient >= orient_count(tile.kind))
        throw Error("orientation out of range at (" + std::to_string(r) + "," + std::to_string(c) + ")");
      t.at(r, c) = tile;
    }
  }
  return t;
}
}  // namespace

Tiling tiling_from_json(const std::string& text) {
  try {
    return tiling_from_json_unguarded(text);
  } catch (const json::exception& e) {
    throw Error(std::string("malformed tiling: ") + e.what());
  }
}

std::string colouring_to_text(const GridColouring& c) {
  std::string s;
  for (int r = 0; r < c.rows; ++r) {
    for (int k = 0; k < c.cols; ++k) s += static_cast<char>('0' + c.at(r, k));
    s += '\n';
  }
  return s;
}

GridColouring colouring_from_text(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (!line.empty()) lines.push_back(line);
  }
  if (lines.empty()) throw Error("colouring is empty");
  GridColouring c(static_cast<int>(lines.size()), static_cast<int>(lines[0].size()));
  for (int r = 0; r < c.rows; ++r) {
    if (static_cast<int>(lines[r].size()) != c.cols) throw Error("colouring line " + std::to_string(r + 1) + " has the wrong length");
    for (int k = 0; k < c.cols; ++k) {
      char ch = lines[r][k];
      if (ch < '0' || ch > '2') throw Error("colouring line " + std::to_string(r + 1) + " has a digit outside 0..2");
      c.at(r, k) = ch - '0';
    }
  }
  return c;
}

std::string lozenge_tiling_to_json(const DecoratedLozengeTiling& d) {
  const auto& t = d.tiling;
  json ls = json::array();
  for (std::size_t i = 0; i < t.lozenges.size(); ++i) {
    const Lozenge& l = t.lozenges[i];
    json e{{"x", l.x}, {"y", l.y}, {"orient", l.orient}};
    if (i < d.decorations.size()) {
      e["split"] = to_string(d.decorations[i].split);
      e["decoration"] = d.decorations[i].orient;
    }
    ls.push_back(e);
  }
  return json{{"a", t.a}, {"b", t.b}, {"c", t.c}, {"lozenges", ls}}.dump();
}

namespace {
DecoratedLozengeTiling lozenge_tiling_from_json_unguarded(const std::string& text) {
  json j = parse(text, "lozenge tiling");
  DecoratedLozengeTiling d;
  d.tiling.a = field<int>(j, "a", "lozenge tiling");
  d.tiling.b = field<int>(j, "b", "lozenge tiling");
  d.tiling.c = field<int>(j, "c", "lozenge tiling");
  if (!j.contains("lozenges") || !j["lozenges"].is_array()) throw Error("lozenge tiling needs a \"lozenges\" list");
  bool decorated = true;
  for (const auto& e : j["lozenges"]) {
    Lozenge l{field<int>(e, "x", "lozenge"), field<int>(e, "y", "lozenge"), field<int>(e, "orient", "lozenge")};
    if (l.orient < 0 || l.orient > 2) throw Error("lozenge orientation must be 0, 1 or 2");
    d.tiling.lozenges.push_back(l);
    if (e.contains("split")) {
      DecoratedLozenge dec{parse_lozenge_split(field<std::string>(e, "split", "lozenge")),
                           field<int>(e, "decoration", "lozenge")};
      if (dec.orient < 0 || dec.orient > 1) throw Error("lozenge decoration must be 0 or 1");
      d.decorations.push_back(dec);
    } else {
      decorated = false;
    }
  }
  if (!decorated) d.decorations.clear();
  return d;
}
}  // namespace

DecoratedLozengeTiling lozenge_tiling_from_json(const std::string& text) {
  try {
    return lozenge_tiling_from_json_unguarded(text);
  } catch (const json::exception& e) {
    throw Error(std::string("malformed lozenge tiling: ") + e.what());
  }
}

namespace {
NamedDeformation assignment_from_json_unguarded(const std::string& text) {
  json j = parse(text, "assignment");
  NamedDeformation n;
  n.group = field<std::string>(j, "group", "assignment");
  n.assignment.group = n.group;
  if (j.contains("domain")) n.scale = j["domain"].value("scale", 1.0);
  if (!j.contains("pairs") || !j["pairs"].is_array()) throw Error("assignment needs a \"pairs\" list");
  for (const auto& p : j["pairs"]) {
    if (!p.contains("curve")) throw Error("assignment pair is missing \"curve\"");
    const json& c = p["curve"];
    std::string kind = field<std::string>(c, "kind", "curve");
    json params = c.value("params", json::object());
    double amp = params.value("amplitude", 0.5);
    PairDeformation d;
    if (kind == "midpoint_peak") {
      d.curve = DeformationCurve::midpoint_peak(amp);
    } else if (kind == "endpoint_peak") {
      d.curve = DeformationCurve::endpoint_peak(params.value("amplitude", 0.25), params.value("at_end", false));
    } else if (kind == "zigzag") {
      d.curve = DeformationCurve::zigzag(params.value("amplitude", 0.25));
    } else if (kind == "quadratic") {
      d.curve = DeformationCurve::quadratic(amp, params.value("samples", 16));
    } else if (kind == "polyline") {
      d.curve = DeformationCurve::polyline(points_from(params.value("points", json::array()), "polyline curve"));
    } else {
      throw Error("unknown curve kind '" + kind + "'");
    }
    std::string pol = p.value("polarity", std::string("inward"));
    if (pol != "inward" && pol != "outward") throw Error("polarity must be inward or outward");
    d.polarity = pol == "inward" ? Polarity::Inward : Polarity::Outward;
    n.assignment.pairs.push_back(d);
  }
  return n;
}
}  // namespace

NamedDeformation assignment_from_json(const std::string& text) {
  try {
    return assignment_from_json_unguarded(text);
  } catch (const json::exception& e) {
    throw Error(std::string("malformed assignment: ") + e.what());
  }
}

std::string assignment_to_json(const NamedDeformation& n) {
  json pairs = json::array();
  for (const auto& p : n.assignment.pairs) {
    json curve;
    if (p.curve.kind == DeformationCurve::Kind::Quadratic)
      curve = {{"kind", "quadratic"},
               {"params", {{"amplitude", p.curve.control.empty() ? 0.0 : p.curve.control[0].y}, {"samples", p.curve.samples}}}};
    else
      curve = {{"kind", "polyline"}, {"params", {{"points", points_json(p.curve.control)}}}};
    pairs.push_back({{"curve", curve}, {"polarity", to_string(p.polarity)}});
  }
  return json{{"group", n.group}, {"domain", {{"scale", n.scale}}}, {"pairs", pairs}}.dump(2) + "\n";
}

std::string assembly_to_json(const Assembly& a) {
  json ps = json::array();
  for (std::size_t i = 0; i < a.placements.size(); ++i) {
    const Placement& p = a.placements[i];
    const auto& L = p.transform.linear;
    Vec2 t = p.transform.translation;
    json m = {L[0], L[1], 0.0, t.x, L[2], L[3], 0.0, t.y, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 1.0};
    bool frame = std::find(a.frame.begin(), a.frame.end(), static_cast<int>(i)) != a.frame.end();
    ps.push_back({{"block", p.block}, {"matrix", m}, {"frame", frame}, {"index", p.index}});
  }
  return json{{"region", points_json(a.region.vertices)}, {"height", a.height}, {"placements", ps}}.dump(1) + "\n";
}

namespace {
Assembly assembly_from_json_unguarded(const std::string& text) {
  json j = parse(text, "assembly");
  Assembly a;
  a.region.vertices = points_from(j.value("region", json::array()), "region");
  if (a.region.vertices.size() < 3) throw Error("assembly region needs at least 3 points");
  a.height = field<double>(j, "height", "assembly");
  if (!(a.height > 0)) throw Error("assembly height must be positive");
  if (!j.contains("placements") || !j["placements"].is_array()) throw Error("assembly needs a \"placements\" list");
  for (const auto& e : j["placements"]) {
    Placement p;
    p.block = field<std::string>(e, "block", "placement");
    auto m = field<std::vector<double>>(e, "matrix", "placement");
    if (m.size() != 16) throw Error("placement matrix must have 16 entries");
    p.transform.linear = {m[0], m[1], m[4], m[5]};
    p.transform.translation = {m[3], m[7]};
    p.transform.proper = p.transform.det() > 0;
    if (!is_valid(p.transform, 1e-9) || m[2] != 0 || m[6] != 0 || m[8] != 0 || m[9] != 0 || m[10] != 1 || m[11] != 0)
      throw Error("placement matrix is not a planar isometry");
    if (e.contains("index")) p.index = e["index"].get<std::array<int, 3>>();
    if (e.value("frame", false)) a.frame.push_back(static_cast<int>(a.placements.size()));
    a.placements.push_back(p);
  }
  return a;
}
}  // namespace

Assembly assembly_from_json(const std::string& text) {
  try {
    return assembly_from_json_unguarded(text);
  } catch (const json::exception& e) {
    throw Error(std::string("malformed assembly: ") + e.what());
  }
}

std::string report_to_json(const SpaceFillingReport& r) {
  json samples = json::array();
  for (std::size_t i = 0; i < r.z.size(); ++i)
    samples.push_back({{"z", r.z[i]}, {"deficit", r.deficit[i]}, {"max_overlap", r.max_overlap[i]}});
  return json{{"pass", r.pass}, {"region_area", r.region_area}, {"samples", samples}}.dump(1) + "\n";
}

std::string mesh_to_text(const TriMesh& m) {
  std::string s;
  for (const Vec3& v : m.vertices) s += "v " + num(v.x) + " " + num(v.y) + " " + num(v.z) + "\n";
  for (const auto& f : m.faces)
    s += "f " + std::to_string(f[0] + 1) + " " + std::to_string(f[1] + 1) + " " + std::to_string(f[2] + 1) + "\n";
  return s;
}

TriMesh mesh_from_text(const std::string& text) {
  TriMesh m;
  std::istringstream in(text);
  int line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag[0] == '#') continue;
    if (tag == "v") {
      Vec3 v;
      if (!(ls >> v.x >> v.y >> v.z)) throw Error("bad vertex on line " + std::to_string(line_no));
      m.vertices.push_back(v);
    } else if (tag == "f") {
      std::array<int, 3> f;
      if (!(ls >> f[0] >> f[1] >> f[2])) throw Error("bad face on line " + std::to_string(line_no));
      for (int& k : f) {
        if (k < 1 || k > static_cast<int>(m.vertices.size()))
          throw Error("face index out of range on line " + std::to_string(line_no));
        --k;
      }
      m.faces.push_back(f);
    } else {
      throw Error("unknown record '" + tag + "' on line " + std::to_string(line_no));
    }
  }
  return m;
}

std::string assembly_svg(const Assembly& a) {
  std::vector<std::vector<Polygon2>> tops;
  std::vector<Vec2> all = a.region.vertices;
  for (const auto& p : a.placements) {
    std::vector<Polygon2> top;
    for (const auto& poly : a.block(p.block).top) top.push_back(transformed(p.transform, poly));
    for (const auto& poly : top) all.insert(all.end(), poly.vertices.begin(), poly.vertices.end());
    tops.push_back(std::move(top));
  }
  std::ostringstream s;
  s << svg_open(bounding_box(all), 0.2);
  for (std::size_t i = 0; i < tops.size(); ++i) {
    bool frame = std::find(a.frame.begin(), a.frame.end(), static_cast<int>(i)) != a.frame.end();
    for (const auto& poly : tops[i])
      s << "<path d=\"" << svg_path(poly.vertices) << "\" fill=\"" << (frame ? "#f4d4d4" : "#d8d8d8")
        << "\" stroke=\"" << (frame ? "#c00000" : "#202020") << "\" stroke-width=\"" << (frame ? "0.04" : "0.015")
        << "\"/>\n";
  }
  s << "<path d=\"" << svg_path(a.region.vertices)
    << "\" fill=\"none\" stroke=\"#0050c0\" stroke-width=\"0.03\" stroke-dasharray=\"0.1 0.06\"/>\n</svg>\n";
  return s.str();
}

std::string tiling_svg(const Tiling& t) {
  std::ostringstream s;
  s << svg_open(Box2{-0.5, -0.5, t.cols - 0.5, t.rows - 0.5}, 0.2);
  // Edge k of a cell centred at c runs counter-clockwise from corner k.
  const Vec2 corners[4] = {{-0.5, -0.5}, {0.5, -0.5}, {0.5, 0.5}, {-0.5, 0.5}};
  for (int r = 0; r < t.rows; ++r)
    for (int c = 0; c < t.cols; ++c) {
      Vec2 centre{static_cast<double>(c), static_cast<double>(t.rows - 1 - r)};
      std::vector<Vec2> cell;
      for (Vec2 k : corners) cell.push_back(centre + k);
      s << "<path d=\"" << svg_path(cell) << "\" fill=\"#ffffff\" stroke=\"#a0a0a0\" stroke-width=\"0.01\"/>\n";
      EdgeColours ec = boundary_colours(t.at(r, c));
      for (int e = 0; e < 4; ++e) {
        Vec2 a = cell[e], b = cell[(e + 1) % 4];
        for (const auto& seg : ec[e]) {
          if (seg.colour != Colour::Black) continue;
          // Drawn slightly inside the cell so neighbouring edges stay distinguishable.
          Vec2 in = (centre - (a + b) * 0.5) * 0.08;
          Vec2 p = a + (b - a) * seg.t0 + in, q = a + (b - a) * seg.t1 + in;
          s << "<line x1=\"" << num(p.x) << "\" y1=\"" << num(-p.y) << "\" x2=\"" << num(q.x) << "\" y2=\"" << num(-q.y)
            << "\" stroke=\"#000000\" stroke-width=\"0.08\"/>\n";
        }
      }
    }
  s << "</svg>\n";
  return s.str();
}

}  // namespace tia
