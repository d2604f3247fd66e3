#include "tia/euclid.hpp"

#include <algorithm>
#include <limits>

namespace tia {

namespace {

// Snaps trigonometric noise so that quarter turns stay exact.
double tidy(double v) {
  for (double r : {-1.0, 0.0, 1.0})
    if (std::abs(v - r) < 1e-15) return r;
  return v;
}

}  // namespace

Isometry2 Isometry2::translate(Vec2 t) {
  Isometry2 g;
  g.translation = t;
  return g;
}

Isometry2 Isometry2::rotation(double angle, Vec2 centre) {
  double c = tidy(std::cos(angle)), s = tidy(std::sin(angle));
  Isometry2 g;
  g.linear = {c, -s, s, c};
  g.translation = centre - g.apply_linear(centre);
  return g;
}

Isometry2 Isometry2::reflection(Vec2 point, Vec2 dir) {
  double n = norm(dir);
  double dx = dir.x / n, dy = dir.y / n;
  Isometry2 g;
  g.linear = {tidy(dx * dx - dy * dy), tidy(2 * dx * dy), tidy(2 * dx * dy), tidy(dy * dy - dx * dx)};
  g.translation = point - g.apply_linear(point);
  g.proper = false;
  return g;
}

Isometry2 Isometry2::glide(Vec2 point, Vec2 dir, double shift) {
  return compose(translate(dir * (shift / norm(dir))), reflection(point, dir));
}

Isometry2 compose(const Isometry2& a, const Isometry2& b) {
  const auto& A = a.linear;
  const auto& B = b.linear;
  Isometry2 g;
  g.linear = {A[0] * B[0] + A[1] * B[2], A[0] * B[1] + A[1] * B[3],
              A[2] * B[0] + A[3] * B[2], A[2] * B[1] + A[3] * B[3]};
  g.translation = a.apply(b.translation);
  g.proper = (a.proper == b.proper);
  return g;
}

Isometry2 inverse(const Isometry2& g) {
  Isometry2 r;
  r.linear = {g.linear[0], g.linear[2], g.linear[1], g.linear[3]};
  r.translation = -r.apply_linear(g.translation);
  r.proper = g.proper;
  return r;
}

bool approx_equal(const Isometry2& a, const Isometry2& b, double tol) {
  if (a.proper != b.proper) return false;
  for (int i = 0; i < 4; ++i)
    if (std::abs(a.linear[i] - b.linear[i]) > tol) return false;
  return near(a.translation, b.translation, tol);
}

bool is_valid(const Isometry2& g, double tol) {
  const auto& L = g.linear;
  double m00 = L[0] * L[0] + L[2] * L[2], m11 = L[1] * L[1] + L[3] * L[3];
  double m01 = L[0] * L[1] + L[2] * L[3];
  if (std::abs(m00 - 1) > tol || std::abs(m11 - 1) > tol || std::abs(m01) > tol) return false;
  return std::abs(g.det() - (g.proper ? 1.0 : -1.0)) <= tol;
}

double signed_area(const std::vector<Vec2>& ring) {
  double s = 0;
  for (std::size_t i = 0, n = ring.size(); i < n; ++i) s += cross(ring[i], ring[(i + 1) % n]);
  return s / 2;
}

double polygon_area(const Polygon2& p) {
  double a = signed_area(p.vertices);
  if (std::abs(a) < 1e-12) throw Error("degenerate polygon");
  return std::abs(a);
}

Polygon2 transformed(const Isometry2& g, const Polygon2& p) {
  Polygon2 r;
  r.vertices.reserve(p.vertices.size());
  for (Vec2 v : p.vertices) r.vertices.push_back(g.apply(v));
  // Reflections reverse orientation; restore counter-clockwise order.
  if (!g.proper) std::reverse(r.vertices.begin(), r.vertices.end());
  return r;
}

Polyline2 transformed(const Isometry2& g, const Polyline2& p) {
  Polyline2 r;
  r.closed = p.closed;
  for (Vec2 v : p.points) r.points.push_back(g.apply(v));
  return r;
}

double polyline_length(const Polyline2& p) {
  double s = 0;
  std::size_t n = p.points.size();
  for (std::size_t i = 0; i + 1 < n; ++i) s += dist(p.points[i], p.points[i + 1]);
  if (p.closed && n > 1) s += dist(p.points.back(), p.points.front());
  return s;
}

Box2 bounding_box(const std::vector<Vec2>& pts) {
  Box2 b{std::numeric_limits<double>::max(), std::numeric_limits<double>::max(),
         std::numeric_limits<double>::lowest(), std::numeric_limits<double>::lowest()};
  for (Vec2 p : pts) {
    b.x0 = std::min(b.x0, p.x);
    b.y0 = std::min(b.y0, p.y);
    b.x1 = std::max(b.x1, p.x);
    b.y1 = std::max(b.y1, p.y);
  }
  return b;
}

// ---- exact predicates on the snapping grid ----

namespace {

struct IPt {
  std::int64_t x, y;
  bool operator==(const IPt& o) const { return x == o.x && y == o.y; }
  bool operator<(const IPt& o) const { return x < o.x || (x == o.x && y < o.y); }
};

IPt snap(Vec2 p) {
  return {static_cast<std::int64_t>(std::llround(p.x / kSnap)),
          static_cast<std::int64_t>(std::llround(p.y / kSnap))};
}

using i128 = __int128;

int sgn(i128 v) { return (v > 0) - (v < 0); }

i128 icross(IPt u, IPt v) { return (i128)u.x * v.y - (i128)u.y * v.x; }
i128 idot(IPt u, IPt v) { return (i128)u.x * v.x + (i128)u.y * v.y; }
IPt isub(IPt a, IPt b) { return {a.x - b.x, a.y - b.y}; }

int iorient(IPt a, IPt b, IPt c) { return sgn(icross(isub(b, a), isub(c, a))); }

// c lies on the closed segment ab (assuming collinearity was checked).
bool within(IPt a, IPt b, IPt c) {
  return std::min(a.x, b.x) <= c.x && c.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= c.y &&
         c.y <= std::max(a.y, b.y);
}

// Snapped curve with consecutive duplicates removed.
struct ICurve {
  std::vector<IPt> p;
  bool closed = false;
  std::size_t segments() const { return p.size() < 2 ? 0 : (closed ? p.size() : p.size() - 1); }
  IPt at(std::size_t i) const { return p[i % p.size()]; }
};

ICurve snap_curve(const Polyline2& c) {
  ICurve r;
  r.closed = c.closed;
  for (Vec2 v : c.points) {
    IPt q = snap(v);
    if (r.p.empty() || !(r.p.back() == q)) r.p.push_back(q);
  }
  if (r.closed && r.p.size() > 1 && r.p.front() == r.p.back()) r.p.pop_back();
  return r;
}

// Angular rank of w measured counter-clockwise from u: 0 same, 1 upper, 2 opposite, 3 lower.
int rank_from(IPt u, IPt w) {
  i128 c = icross(u, w);
  if (c > 0) return 1;
  if (c < 0) return 3;
  return idot(u, w) > 0 ? 0 : 2;
}

// Counter-clockwise angle from u to a is smaller than from u to b.
bool angle_less(IPt u, IPt a, IPt b) {
  int ra = rank_from(u, a), rb = rank_from(u, b);
  if (ra != rb) return ra < rb;
  if (ra == 1 || ra == 3) return icross(a, b) > 0;
  return false;
}

bool same_dir(IPt a, IPt b) { return icross(a, b) == 0 && idot(a, b) > 0; }

using Passage = std::vector<IPt>;  // arm directions away from the contact point

std::vector<Passage> passages(const ICurve& c, IPt q) {
  std::vector<Passage> out;
  std::size_t n = c.p.size();
  for (std::size_t k = 0; k < n; ++k) {
    if (!(c.p[k] == q)) continue;
    Passage arms;
    if (k > 0 || c.closed) arms.push_back(isub(c.p[(k + n - 1) % n], q));
    if (k + 1 < n || c.closed) arms.push_back(isub(c.p[(k + 1) % n], q));
    out.push_back(arms);
  }
  for (std::size_t s = 0; s < c.segments(); ++s) {
    IPt a = c.at(s), b = c.at(s + 1);
    if (a == q || b == q) continue;
    if (iorient(a, b, q) == 0 && within(a, b, q)) out.push_back({isub(a, q), isub(b, q)});
  }
  return out;
}

// Two passages through a common point cross iff their arms strictly alternate.
bool interleaved(const Passage& pa, const Passage& pb) {
  if (pa.size() != 2 || pb.size() != 2) return false;
  if (same_dir(pa[0], pa[1]) || same_dir(pb[0], pb[1])) return false;
  for (IPt a : pa)
    for (IPt b : pb)
      if (same_dir(a, b)) return false;
  // Is b strictly inside the counter-clockwise sector from pa[0] to pa[1]?
  auto inside = [&](IPt b) { return angle_less(pa[0], b, pa[1]); };
  return inside(pb[0]) != inside(pb[1]);
}

Box2 seg_box(IPt a, IPt b) {
  return {(double)std::min(a.x, b.x), (double)std::min(a.y, b.y), (double)std::max(a.x, b.x),
          (double)std::max(a.y, b.y)};
}

// Scans segment pairs; returns true on a proper crossing, else collects contact points.
bool scan_pairs(const ICurve& A, const ICurve& B, bool same, std::vector<IPt>& contacts) {
  std::size_t na = A.segments(), nb = B.segments();
  std::vector<Box2> boxes_b(nb);
  for (std::size_t j = 0; j < nb; ++j) boxes_b[j] = seg_box(B.at(j), B.at(j + 1));
  for (std::size_t i = 0; i < na; ++i) {
    IPt a0 = A.at(i), a1 = A.at(i + 1);
    Box2 ba = seg_box(a0, a1);
    for (std::size_t j = same ? i + 1 : 0; j < nb; ++j) {
      if (same) {
        bool adjacent = (j == i + 1) || (A.closed && i == 0 && j + 1 == na);
        if (adjacent) continue;
      }
      if (!ba.overlaps(boxes_b[j])) continue;
      IPt b0 = B.at(j), b1 = B.at(j + 1);
      int o1 = iorient(a0, a1, b0), o2 = iorient(a0, a1, b1);
      int o3 = iorient(b0, b1, a0), o4 = iorient(b0, b1, a1);
      if (o1 * o2 < 0 && o3 * o4 < 0) return true;
      if (o1 == 0 && within(a0, a1, b0)) contacts.push_back(b0);
      if (o2 == 0 && within(a0, a1, b1)) contacts.push_back(b1);
      if (o3 == 0 && within(b0, b1, a0)) contacts.push_back(a0);
      if (o4 == 0 && within(b0, b1, a1)) contacts.push_back(a1);
    }
  }
  std::sort(contacts.begin(), contacts.end());
  contacts.erase(std::unique(contacts.begin(), contacts.end()), contacts.end());
  return false;
}

}  // namespace

int orientation(Vec2 a, Vec2 b, Vec2 c) { return iorient(snap(a), snap(b), snap(c)); }

bool polylines_cross(const Polyline2& a, const Polyline2& b) {
  ICurve A = snap_curve(a), B = snap_curve(b);
  std::vector<IPt> contacts;
  if (scan_pairs(A, B, false, contacts)) return true;
  for (IPt q : contacts) {
    auto pa = passages(A, q), pb = passages(B, q);
    for (const auto& x : pa)
      for (const auto& y : pb)
        if (interleaved(x, y)) return true;
  }
  return false;
}

bool polyline_self_crosses(const Polyline2& p) {
  ICurve A = snap_curve(p);
  std::vector<IPt> contacts;
  if (scan_pairs(A, A, true, contacts)) return true;
  for (IPt q : contacts) {
    auto ps = passages(A, q);
    for (std::size_t i = 0; i < ps.size(); ++i)
      for (std::size_t j = i + 1; j < ps.size(); ++j)
        if (interleaved(ps[i], ps[j])) return true;
  }
  return false;
}

// ---- ring cleanup ----

std::vector<Vec2> clean_ring(std::vector<Vec2> r, double tol) {
  bool changed = true;
  while (changed && r.size() >= 2) {
    changed = false;
    for (std::size_t i = 0; i < r.size() && r.size() >= 2; ++i) {
      std::size_t n = r.size();
      std::size_t j = (i + 1) % n;
      if (near(r[i], r[j], tol)) {
        r.erase(r.begin() + j);
        changed = true;
        break;
      }
    }
    if (changed || r.size() < 3) continue;
    for (std::size_t i = 0; i < r.size(); ++i) {
      std::size_t n = r.size();
      Vec2 a = r[(i + n - 1) % n], b = r[i], c = r[(i + 1) % n];
      // Path folds back on itself at b: a spike of zero width.
      if (orientation(a, b, c) == 0 && dot(b - a, c - b) < 0) {
        r.erase(r.begin() + i);
        changed = true;
        break;
      }
    }
  }
  if (r.size() < 3) r.clear();
  return r;
}

std::vector<std::vector<Vec2>> split_pinches(const std::vector<Vec2>& r, double tol) {
  std::size_t n = r.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (near(r[i], r[j], tol)) {
        std::vector<Vec2> first(r.begin() + i, r.begin() + j);
        std::vector<Vec2> second(r.begin() + j, r.end());
        second.insert(second.end(), r.begin(), r.begin() + i);
        auto out = split_pinches(first, tol);
        auto more = split_pinches(second, tol);
        out.insert(out.end(), more.begin(), more.end());
        return out;
      }
  return {r};
}

std::vector<Polygon2> ring_to_polygons(const std::vector<Vec2>& ring, double tol) {
  std::vector<Polygon2> out;
  for (auto& piece : split_pinches(clean_ring(ring, tol), tol)) {
    auto c = clean_ring(piece, tol);
    if (c.size() < 3 || std::abs(signed_area(c)) < 1e-14) continue;
    out.push_back({std::move(c)});
  }
  return out;
}

// ---- triangulation and clipping ----

std::vector<std::array<int, 3>> ear_clip(const std::vector<Vec2>& ring) {
  std::vector<std::array<int, 3>> tris;
  int n = static_cast<int>(ring.size());
  if (n < 3) return tris;
  std::vector<int> idx(n);
  for (int i = 0; i < n; ++i) idx[i] = i;
  bool flip = signed_area(ring) < 0;
  if (flip) std::reverse(idx.begin(), idx.end());
  std::vector<IPt> q(n);
  for (int i = 0; i < n; ++i) q[i] = snap(ring[i]);

  auto emit = [&](int a, int b, int c) {
    if (flip) tris.push_back({a, c, b});
    else tris.push_back({a, b, c});
  };

  while (idx.size() > 3) {
    int m = static_cast<int>(idx.size());
    // Visit positions in increasing original index so the lowest-index ear wins.
    std::vector<int> order(m);
    for (int k = 0; k < m; ++k) order[k] = k;
    std::sort(order.begin(), order.end(), [&](int x, int y) { return idx[x] < idx[y]; });
    int cut = -1;
    for (int k : order) {
      int a = idx[(k + m - 1) % m], b = idx[k], c = idx[(k + 1) % m];
      if (iorient(q[a], q[b], q[c]) <= 0) continue;
      bool blocked = false;
      for (int t : idx) {
        if (t == a || t == b || t == c) continue;
        IPt p = q[t];
        if (p == q[a] || p == q[b] || p == q[c]) continue;
        if (iorient(q[a], q[b], p) >= 0 && iorient(q[b], q[c], p) >= 0 && iorient(q[c], q[a], p) >= 0) {
          blocked = true;
          break;
        }
      }
      if (!blocked) {
        cut = k;
        break;
      }
    }
    if (cut < 0) {
      // Only flat vertices remain cuttable; drop one without emitting a triangle.
      for (int k : order) {
        int a = idx[(k + m - 1) % m], b = idx[k], c = idx[(k + 1) % m];
        if (iorient(q[a], q[b], q[c]) == 0) {
          cut = k;
          break;
        }
      }
      if (cut < 0) throw Error("ear clipping failed: polygon not simple");
      idx.erase(idx.begin() + cut);
      continue;
    }
    emit(idx[(cut + m - 1) % m], idx[cut], idx[(cut + 1) % m]);
    idx.erase(idx.begin() + cut);
  }
  if (iorient(q[idx[0]], q[idx[1]], q[idx[2]]) > 0) emit(idx[0], idx[1], idx[2]);
  return tris;
}

std::vector<Triangle2> triangulate(const Polygon2& p) {
  std::vector<Triangle2> out;
  for (auto& t : ear_clip(p.vertices)) out.push_back({p.vertices[t[0]], p.vertices[t[1]], p.vertices[t[2]]});
  return out;
}

double convex_intersection_area(const std::vector<Vec2>& a, const std::vector<Vec2>& b) {
  std::vector<Vec2> poly = a, next;
  std::size_t nb = b.size();
  for (std::size_t i = 0; i < nb && !poly.empty(); ++i) {
    Vec2 e0 = b[i], e1 = b[(i + 1) % nb];
    Vec2 e = e1 - e0;
    next.clear();
    std::size_t np = poly.size();
    for (std::size_t k = 0; k < np; ++k) {
      Vec2 p = poly[k], r = poly[(k + 1) % np];
      double sp = cross(e, p - e0), sr = cross(e, r - e0);
      if (sp >= 0) next.push_back(p);
      if ((sp >= 0) != (sr >= 0)) {
        double t = sp / (sp - sr);
        next.push_back(p + (r - p) * t);
      }
    }
    poly.swap(next);
  }
  return poly.size() < 3 ? 0.0 : std::max(0.0, signed_area(poly));
}

double overlap_area(const std::vector<Triangle2>& a, const std::vector<Triangle2>& b) {
  std::vector<Box2> bb(b.size());
  for (std::size_t j = 0; j < b.size(); ++j) bb[j] = bounding_box({b[j].begin(), b[j].end()});
  double s = 0;
  for (const auto& ta : a) {
    Box2 ba = bounding_box({ta.begin(), ta.end()});
    std::vector<Vec2> va(ta.begin(), ta.end());
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (!ba.overlaps(bb[j])) continue;
      s += convex_intersection_area(va, {b[j].begin(), b[j].end()});
    }
  }
  return s;
}

double overlap_area(const Polygon2& a, const Polygon2& b) {
  if (!bounding_box(a.vertices).overlaps(bounding_box(b.vertices))) return 0.0;
  return overlap_area(triangulate(a), triangulate(b));
}

double distance_to_boundary(const Polygon2& p, Vec2 q) {
  double best = std::numeric_limits<double>::max();
  std::size_t n = p.vertices.size();
  for (std::size_t i = 0; i < n; ++i) {
    Vec2 a = p.vertices[i], b = p.vertices[(i + 1) % n];
    Vec2 d = b - a;
    double L2 = dot(d, d);
    double t = L2 > 0 ? std::clamp(dot(q - a, d) / L2, 0.0, 1.0) : 0.0;
    best = std::min(best, dist(q, a + d * t));
  }
  return best;
}

bool contains(const Polygon2& p, Vec2 q, double tol) {
  if (distance_to_boundary(p, q) <= tol) return true;
  bool in = false;
  std::size_t n = p.vertices.size();
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    Vec2 a = p.vertices[i], b = p.vertices[j];
    if ((a.y > q.y) != (b.y > q.y) && q.x < (b.x - a.x) * (q.y - a.y) / (b.y - a.y) + a.x) in = !in;
  }
  return in;
}

double total_area(const std::vector<Polygon2>& ps) {
  double s = 0;
  for (const auto& p : ps) s += signed_area(p.vertices);
  return s;
}

}  // namespace tia
