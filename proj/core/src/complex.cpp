#include "tia/complex.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace tia {

namespace {

const double kPi = std::acos(-1.0);

using Key = std::pair<long long, long long>;
Key key_of(Vec2 p) { return {std::llround(p.x * 1e6), std::llround(p.y * 1e6)}; }

Vec2 edge_mid(const Polygon2& p, int k) {
  std::size_t n = p.vertices.size();
  return (p.vertices[k] + p.vertices[(k + 1) % n]) * 0.5;
}

Polygon2 regular_square(Vec2 centre, double first_angle_deg) {
  Polygon2 p;
  for (int k = 0; k < 4; ++k) {
    double t = (first_angle_deg + 90.0 * k) * kPi / 180.0;
    p.vertices.push_back(centre + Vec2{std::cos(t), std::sin(t)} * std::sqrt(0.5));
  }
  return p;
}

// The four faces of the translation cell at the origin: two squares, then two lozenges.
std::vector<ComplexFace> reference_cell(double a) {
  std::vector<Polygon2> squares;
  for (int i = -1; i <= 1; ++i)
    for (int j = -1; j <= 1; ++j) {
      Vec2 c{i * a, j * a};
      squares.push_back(regular_square(c, 30));
      squares.push_back(regular_square(c + Vec2{a / 2, a / 2}, 60));
    }
  struct Tri {
    Vec2 v[3];
    Vec2 centroid;
  };
  std::map<Key, Tri> tris;
  for (const auto& sq : squares)
    for (int k = 0; k < 4; ++k) {
      Vec2 p = sq.vertices[k], q = sq.vertices[(k + 1) % 4];
      Vec2 out = left_normal(p - q);  // right of p->q is outside a counter-clockwise square
      Vec2 apex = (p + q) * 0.5 + out * (std::sqrt(3.0) / 2);
      Tri t{{q, p, apex}, (p + q + apex) * (1.0 / 3)};
      tris.emplace(key_of(t.centroid), t);
    }
  std::vector<ComplexFace> cell;
  ComplexFace s1{squares[8], "square", 0, 0, 0, {}}, s2{squares[9], "square", 0, 0, 1, {}};
  cell.push_back(s1);
  cell.push_back(s2);
  const Vec2 targets[2] = {{0, a / 2}, {a / 2, 0}};
  for (int slot = 0; slot < 2; ++slot) {
    std::vector<Tri> pair;
    for (const auto& [_, t] : tris)
      if (dist(t.centroid, targets[slot]) < 0.5) pair.push_back(t);
    if (pair.size() != 2) throw Error("snub square construction failed");
    std::vector<Vec2> pts;
    for (const auto& t : pair)
      for (Vec2 v : t.v)
        if (std::none_of(pts.begin(), pts.end(), [&](Vec2 w) { return dist(v, w) < 1e-9; })) pts.push_back(v);
    if (pts.size() != 4) throw Error("snub square construction failed");
    Vec2 c = targets[slot];
    std::sort(pts.begin(), pts.end(), [&](Vec2 p, Vec2 q) {
      double ap = std::atan2(p.y - c.y, p.x - c.x), aq = std::atan2(q.y - c.y, q.x - c.x);
      if (ap < -1e-9) ap += 2 * kPi;
      if (aq < -1e-9) aq += 2 * kPi;
      return ap < aq;
    });
    cell.push_back({{pts}, "lozenge", 0, 0, 2 + slot, {}});
  }
  return cell;
}

std::vector<std::vector<int>> black_options(const ComplexFace& f, SnubVariant v) {
  if (f.kind == "square") return {{0, 1}, {1, 2}, {2, 3}, {3, 0}};
  std::vector<std::vector<int>> out;
  if (v == SnubVariant::RhomPair) {
    for (int k = 0; k < 4; ++k) {
      Vec2 prev = f.polygon.vertices[(k + 3) % 4], cur = f.polygon.vertices[k], next = f.polygon.vertices[(k + 1) % 4];
      if (dot(prev - cur, next - cur) > 0) out.push_back({(k + 3) % 4, k});  // acute corner
    }
  }
  out.push_back({0, 2});
  out.push_back({1, 3});
  return out;
}

}  // namespace

TilingComplex snub_square_complex(int n, int pad) {
  if (n < 1) throw Error("snub square complex needs at least one cell");
  if (pad < 0) throw Error("padding must be non-negative");
  double a = std::sqrt(2.0 + std::sqrt(3.0));
  auto ref = reference_cell(a);
  TilingComplex c;
  c.cell = a;
  c.n = n;
  double lo = -a / 4, hi = lo + n * a;
  c.window = {{{lo, lo}, {hi, lo}, {hi, hi}, {lo, hi}}};
  for (int j = -pad; j < n + pad; ++j)
    for (int i = -pad; i < n + pad; ++i)
      for (const auto& f : ref) {
        ComplexFace g = f;
        g.cell_x = i;
        g.cell_y = j;
        for (auto& v : g.polygon.vertices) v = v + Vec2{i * a, j * a};
        c.faces.push_back(std::move(g));
      }
  std::map<Key, std::pair<int, int>> seen;
  for (std::size_t fi = 0; fi < c.faces.size(); ++fi) {
    auto& f = c.faces[fi];
    int m = static_cast<int>(f.polygon.vertices.size());
    f.neighbours.assign(m, {-1, -1});
    for (int k = 0; k < m; ++k) {
      Key key = key_of(edge_mid(f.polygon, k));
      auto it = seen.find(key);
      if (it == seen.end()) {
        seen[key] = {static_cast<int>(fi), k};
      } else {
        f.neighbours[k] = it->second;
        c.faces[it->second.first].neighbours[it->second.second] = {static_cast<int>(fi), k};
      }
    }
  }
  return c;
}

std::string complex_violation(const TilingComplex& c, const ComplexColouring& col) {
  if (col.size() != c.faces.size()) return "one colour list per face is required";
  for (std::size_t i = 0; i < c.faces.size(); ++i) {
    if (col[i].size() != c.faces[i].polygon.vertices.size()) return "one colour per edge is required";
    for (std::size_t k = 0; k < col[i].size(); ++k) {
      auto [j, l] = c.faces[i].neighbours[k];
      if (j >= 0 && col[j][l] == col[i][k])
        return "like colours meet between faces " + std::to_string(i) + " and " + std::to_string(j);
    }
  }
  return {};
}

const char* to_string(SnubVariant v) { return v == SnubVariant::RhomPair ? "rhom_pair" : "versatile_triple"; }

SnubVariant parse_snub_variant(const std::string& s) {
  if (s == "rhom_pair") return SnubVariant::RhomPair;
  if (s == "versatile_triple") return SnubVariant::VersatileTriple;
  throw Error("unknown snub variant '" + s + "'");
}

ComplexColouring snub_square_colouring(const TilingComplex& c, SnubVariant v) {
  // Search colourings on a torus of P x P translation cells for growing P. Face
  // (cell mod P, slot) of the torus colours every translate.
  for (int P = 1; P <= 4; ++P) {
    TilingComplex probe = snub_square_complex(P, 1);
    auto torus_index = [&](const ComplexFace& f) {
      int x = ((f.cell_x % P) + P) % P, y = ((f.cell_y % P) + P) % P;
      return (y * P + x) * 4 + f.slot;
    };
    int nvars = 4 * P * P;
    std::vector<int> rep(nvars, -1);
    for (std::size_t i = 0; i < probe.faces.size(); ++i) {
      const auto& f = probe.faces[i];
      if (f.cell_x >= 0 && f.cell_x < P && f.cell_y >= 0 && f.cell_y < P) rep[torus_index(f)] = static_cast<int>(i);
    }
    std::vector<std::vector<std::vector<int>>> options;
    for (int r : rep) options.push_back(black_options(probe.faces[r], v));
    auto black = [&](int var, int pick, int k) {
      const auto& o = options[var][pick];
      return std::count(o.begin(), o.end(), k) > 0;
    };
    std::vector<int> pick(nvars, -1);
    auto fits = [&](int var) {
      const auto& f = probe.faces[rep[var]];
      for (int k = 0; k < 4; ++k) {
        auto [j, l] = f.neighbours[k];
        int w = torus_index(probe.faces[j]);
        if (pick[w] < 0) continue;
        if (black(var, pick[var], k) == black(w, pick[w], l)) return false;
      }
      return true;
    };
    std::vector<int> best;
    int best_score = -1, found = 0, pos = 0;
    while (pos >= 0 && found < 256) {
      if (pos == nvars) {
        ++found;
        std::set<bool> kinds;
        for (int var = 0; var < nvars; ++var)
          if (var % 4 >= 2) kinds.insert((options[var][pick[var]][1] - options[var][pick[var]][0] + 4) % 4 == 2);
        if (static_cast<int>(kinds.size()) > best_score) {
          best_score = static_cast<int>(kinds.size());
          best = pick;
        }
        --pos;
        continue;
      }
      ++pick[pos];
      while (pick[pos] < static_cast<int>(options[pos].size()) && !fits(pos)) ++pick[pos];
      if (pick[pos] == static_cast<int>(options[pos].size())) {
        pick[pos] = -1;
        --pos;
        continue;
      }
      ++pos;
    }
    if (best.empty()) continue;
    ComplexColouring out;
    for (const auto& f : c.faces) {
      int x = ((f.cell_x % P) + P) % P, y = ((f.cell_y % P) + P) % P;
      int var = (y * P + x) * 4 + f.slot;
      std::vector<Colour> col(f.polygon.vertices.size(), Colour::White);
      for (int k : options[var][best[var]]) col[k] = Colour::Black;
      out.push_back(col);
    }
    return out;
  }
  throw Error("no periodic colouring of the snub square tiling for this variant");
}

}  // namespace tia
