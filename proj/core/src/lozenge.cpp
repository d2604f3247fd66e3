#include "tia/lozenge.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <random>
#include <set>

#include "random.hpp"

namespace tia {

namespace {

const double kRt3 = std::sqrt(3.0);

using LatticePt = std::array<int, 2>;
using EdgeKey = std::pair<LatticePt, LatticePt>;

EdgeKey edge_key(LatticePt p, LatticePt q) { return p < q ? EdgeKey{p, q} : EdgeKey{q, p}; }

// Unit triangles: up(x,y) = (x,y),(x+1,y),(x,y+1); down(x,y) = (x+1,y),(x+1,y+1),(x,y+1).
struct Tri {
  int x, y;
  bool up;
  auto operator<=>(const Tri&) const = default;
};

std::array<Tri, 2> triangles_of(const Lozenge& l) {
  switch (l.orient) {
    case 0: return {Tri{l.x, l.y, true}, Tri{l.x, l.y, false}};
    case 1: return {Tri{l.x, l.y, true}, Tri{l.x - 1, l.y, false}};
    default: return {Tri{l.x, l.y, true}, Tri{l.x, l.y - 1, false}};
  }
}

bool in_hexagon(const Tri& t, int a, int b, int c) {
  // Centroid times three, tested against -b <= x <= a, -c <= y <= b, -c <= x+y <= a.
  int X = 3 * t.x + (t.up ? 1 : 2), Y = 3 * t.y + (t.up ? 1 : 2);
  return X >= -3 * b && X <= 3 * a && Y >= -3 * c && Y <= 3 * b && X + Y >= -3 * c && X + Y <= 3 * a;
}

void check_box(int a, int b, int c) {
  if (a < 1 || b < 1 || c < 1) throw Error("hexagon sides must be positive");
}

struct Adjacency {
  // Per lozenge and local edge: the neighbouring lozenge and its local edge, or -1.
  std::vector<std::array<std::pair<int, int>, 4>> nb;
};

Adjacency adjacency(const std::vector<Lozenge>& ls) {
  std::map<EdgeKey, std::pair<int, int>> seen;
  Adjacency adj;
  adj.nb.assign(ls.size(), {std::pair{-1, -1}, std::pair{-1, -1}, std::pair{-1, -1}, std::pair{-1, -1}});
  for (std::size_t i = 0; i < ls.size(); ++i) {
    auto v = lozenge_vertices(ls[i]);
    for (int k = 0; k < 4; ++k) {
      EdgeKey key = edge_key(v[k], v[(k + 1) % 4]);
      auto it = seen.find(key);
      if (it == seen.end()) {
        seen[key] = {static_cast<int>(i), k};
      } else {
        adj.nb[i][k] = it->second;
        adj.nb[it->second.first][it->second.second] = {static_cast<int>(i), k};
      }
    }
  }
  return adj;
}

bool fits(const std::vector<int>& choice, const Adjacency& adj, int i, const DecoratedLozenge& d) {
  auto mine = lozenge_edge_colours(d);
  for (int k = 0; k < 4; ++k) {
    auto [j, kj] = adj.nb[i][k];
    if (j < 0 || choice[j] < 0) continue;
    if (lozenge_edge_colours(all_lozenge_decorations()[choice[j]])[kj] == mine[k]) return false;
  }
  return true;
}

// Breadth-first order so that each lozenge after the first meets an assigned neighbour.
std::vector<int> bfs_order(const Adjacency& adj) {
  std::size_t n = adj.nb.size();
  std::vector<int> order;
  std::vector<bool> seen(n, false);
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::queue<int> q;
    q.push(static_cast<int>(s));
    seen[s] = true;
    while (!q.empty()) {
      int i = q.front();
      q.pop();
      order.push_back(i);
      for (auto [j, _] : adj.nb[i])
        if (j >= 0 && !seen[j]) {
          seen[j] = true;
          q.push(j);
        }
    }
  }
  return order;
}

// Backtracking over decorations of the lozenges listed in `order`; entries of
// `choice` already set stay fixed. `options` gives the candidate order per lozenge.
// Calls visit for each completion; stops early when visit returns false.
std::uint64_t decorate(std::vector<int>& choice, const Adjacency& adj, const std::vector<int>& order,
                       const std::function<std::vector<int>(int)>& options,
                       const std::function<bool()>& visit, std::uint64_t budget) {
  int total = static_cast<int>(order.size());
  std::vector<std::vector<int>> opts(order.size());
  std::vector<int> idx(order.size(), -1);
  std::uint64_t nodes = 0, found = 0;
  int pos = 0;
  while (pos >= 0) {
    if (pos == total) {
      ++found;
      if (!visit()) return found;
      --pos;
      continue;
    }
    int i = order[pos];
    if (idx[pos] < 0) opts[pos] = options(i);
    choice[i] = -1;
    int k = idx[pos] + 1;
    for (; k < static_cast<int>(opts[pos].size()); ++k)
      if (fits(choice, adj, i, all_lozenge_decorations()[opts[pos][k]])) break;
    if (k == static_cast<int>(opts[pos].size())) {
      idx[pos] = -1;
      --pos;
      continue;
    }
    if (++nodes > budget) throw BudgetExceeded("decoration search exceeded the node budget of " + std::to_string(budget));
    idx[pos] = k;
    choice[i] = opts[pos][k];
    ++pos;
  }
  return found;
}

std::vector<int> identity_options(int) { return {0, 1, 2, 3}; }

}  // namespace

Vec2 lattice_point(int x, int y) { return {x + 0.5 * y, 0.5 * kRt3 * y}; }

std::array<std::array<int, 2>, 4> lozenge_vertices(const Lozenge& l) {
  int x = l.x, y = l.y;
  switch (l.orient) {
    case 0: return {{{x + 1, y}, {x + 1, y + 1}, {x, y + 1}, {x, y}}};
    case 1: return {{{x, y + 1}, {x - 1, y + 1}, {x, y}, {x + 1, y}}};
    case 2: return {{{x, y}, {x + 1, y - 1}, {x + 1, y}, {x, y + 1}}};
  }
  throw Error("lozenge orientation must be 0, 1 or 2");
}

Polygon2 lozenge_polygon(const Lozenge& l) {
  Polygon2 p;
  for (auto v : lozenge_vertices(l)) p.vertices.push_back(lattice_point(v[0], v[1]));
  return p;
}

Isometry2 lozenge_placement(const Lozenge& l) {
  auto v = lozenge_vertices(l);
  const double turn = 2.0 * std::acos(-1.0) / 3.0;
  double angle = l.orient == 2 ? 0.0 : (l.orient == 0 ? turn : 2 * turn);
  Isometry2 r = Isometry2::rotation(angle, {0, 0});
  return compose(Isometry2::translate(lattice_point(v[0][0], v[0][1])), r);
}

Polygon2 lozenge_hexagon(int a, int b, int c) {
  check_box(a, b, c);
  return {{lattice_point(a, -c), lattice_point(a, 0), lattice_point(a - b, b), lattice_point(-b, b),
           lattice_point(-b, b - c), lattice_point(0, -c)}};
}

LozengeTiling tiling_from_heights(int a, int b, int c, const std::vector<int>& h) {
  check_box(a, b, c);
  if (h.size() != static_cast<std::size_t>(a) * b) throw Error("height count does not match the box");
  auto H = [&](int i, int j) { return h[static_cast<std::size_t>(i) * b + j]; };
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) {
      if (H(i, j) < 0 || H(i, j) > c) throw Error("height out of range");
      if ((i + 1 < a && H(i + 1, j) > H(i, j)) || (j + 1 < b && H(i, j + 1) > H(i, j)))
        throw Error("heights must not increase along rows and columns");
    }
  LozengeTiling t{a, b, c, {}};
  // A box corner (i, j, z) projects to the lattice point (i - j, j - z).
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) t.lozenges.push_back({i - j, j - H(i, j), 1});
  for (int j = 0; j < b; ++j)
    for (int z = 0; z < c; ++z) {
      int lam = 0;
      for (int i = 0; i < a; ++i) lam += H(i, j) > z;
      t.lozenges.push_back({lam - j - 1, j - z, 2});
    }
  for (int i = 0; i < a; ++i)
    for (int z = 0; z < c; ++z) {
      int mu = 0;
      for (int j = 0; j < b; ++j) mu += H(i, j) > z;
      t.lozenges.push_back({i - mu, mu - z - 1, 0});
    }
  return t;
}

bool is_lozenge_partition(const LozengeTiling& t) {
  if (t.a < 1 || t.b < 1 || t.c < 1) return false;
  std::set<Tri> used;
  for (const Lozenge& l : t.lozenges) {
    if (l.orient < 0 || l.orient > 2) return false;
    for (const Tri& tr : triangles_of(l)) {
      if (!in_hexagon(tr, t.a, t.b, t.c)) return false;
      if (!used.insert(tr).second) return false;
    }
  }
  return used.size() == 2u * static_cast<std::size_t>(t.a * t.b + t.b * t.c + t.c * t.a);
}

std::uint64_t for_each_lozenge_tiling(int a, int b, int c, const std::function<void(const LozengeTiling&)>& visit) {
  check_box(a, b, c);
  if (a * b + b * c + c * a > kMaxLozengeEnumeration)
    throw Error("hexagon too large for enumeration (ab+bc+ca <= " + std::to_string(kMaxLozengeEnumeration) + ")");
  int cells = a * b;
  std::vector<int> h(cells, -1);
  std::uint64_t found = 0;
  int pos = 0;
  while (pos >= 0) {
    if (pos == cells) {
      ++found;
      if (visit) visit(tiling_from_heights(a, b, c, h));
      --pos;
      continue;
    }
    int i = pos / b, j = pos % b;
    int cap = c;
    if (i > 0) cap = std::min(cap, h[pos - b]);
    if (j > 0) cap = std::min(cap, h[pos - 1]);
    if (h[pos] + 1 > cap) {
      h[pos] = -1;
      --pos;
      continue;
    }
    ++h[pos];
    ++pos;
  }
  return found;
}

std::vector<LozengeTiling> enumerate_lozenge_tilings(int a, int b, int c) {
  std::vector<LozengeTiling> out;
  for_each_lozenge_tiling(a, b, c, [&](const LozengeTiling& t) { out.push_back(t); });
  return out;
}

BigInt count_lozenge_tilings(int a, int b, int c) {
  check_box(a, b, c);
  using boost::multiprecision::cpp_rational;
  cpp_rational r = 1;
  for (int i = 1; i <= a; ++i)
    for (int j = 1; j <= b; ++j)
      for (int k = 1; k <= c; ++k) r *= cpp_rational(i + j + k - 1, i + j + k - 2);
  if (denominator(r) != 1) throw Error("box product is not integral");
  return numerator(r);
}

boost::multiprecision::cpp_rational fixed_factor_lozenge_formula(int a, int b, int c) {
  check_box(a, b, c);
  using boost::multiprecision::cpp_rational;
  cpp_rational f(a + b + c - 1, a + b + c - 2), r = 1;
  for (long n = 0; n < static_cast<long>(a) * b * c; ++n) r *= f;
  return r;
}

const char* to_string(LozengeSplit s) { return s == LozengeSplit::Bi ? "bi" : "quad"; }

LozengeSplit parse_lozenge_split(const std::string& s) {
  if (s == "bi") return LozengeSplit::Bi;
  if (s == "quad") return LozengeSplit::Quad;
  throw Error("unknown lozenge split '" + s + "'");
}

std::array<Colour, 4> lozenge_edge_colours(const DecoratedLozenge& d) {
  if (d.orient < 0 || d.orient > 1) throw Error("lozenge decoration orientation must be 0 or 1");
  constexpr Colour K = Colour::Black, W = Colour::White;
  // Edge order e_d, e_c, e_b, e_a.
  if (d.split == LozengeSplit::Bi) return d.orient == 0 ? std::array{W, W, K, K} : std::array{K, K, W, W};
  return d.orient == 0 ? std::array{W, K, W, K} : std::array{K, W, K, W};
}

const std::array<DecoratedLozenge, 4>& all_lozenge_decorations() {
  static const std::array<DecoratedLozenge, 4> all{{{LozengeSplit::Bi, 0},
                                                    {LozengeSplit::Bi, 1},
                                                    {LozengeSplit::Quad, 0},
                                                    {LozengeSplit::Quad, 1}}};
  return all;
}

std::string decoration_violation(const DecoratedLozengeTiling& d) {
  if (d.decorations.size() != d.tiling.lozenges.size()) return "one decoration per lozenge is required";
  if (!is_lozenge_partition(d.tiling)) return "lozenges do not partition the hexagon";
  std::map<EdgeKey, std::pair<std::size_t, Colour>> seen;
  for (std::size_t i = 0; i < d.tiling.lozenges.size(); ++i) {
    if (d.decorations[i].orient < 0 || d.decorations[i].orient > 1) return "bad decoration orientation";
    auto v = lozenge_vertices(d.tiling.lozenges[i]);
    auto col = lozenge_edge_colours(d.decorations[i]);
    for (int k = 0; k < 4; ++k) {
      EdgeKey key = edge_key(v[k], v[(k + 1) % 4]);
      auto it = seen.find(key);
      if (it == seen.end()) {
        seen[key] = {i, col[k]};
      } else if (it->second.second == col[k]) {
        return "like colours meet between lozenges " + std::to_string(it->second.first) + " and " + std::to_string(i);
      }
    }
  }
  return {};
}

bool is_valid_decoration(const DecoratedLozengeTiling& d) { return decoration_violation(d).empty(); }

std::uint64_t for_each_decoration(const LozengeTiling& t,
                                  const std::function<void(const DecoratedLozengeTiling&)>& visit,
                                  std::uint64_t node_budget) {
  Adjacency adj = adjacency(t.lozenges);
  std::vector<int> order = bfs_order(adj);
  std::vector<int> choice(t.lozenges.size(), -1);
  return decorate(
      choice, adj, order, identity_options,
      [&] {
        if (visit) {
          DecoratedLozengeTiling d{t, {}};
          for (int c : choice) d.decorations.push_back(all_lozenge_decorations()[c]);
          visit(d);
        }
        return true;
      },
      node_budget);
}

std::vector<DecoratedLozengeTiling> enumerate_decorations(const LozengeTiling& t, std::uint64_t node_budget) {
  std::vector<DecoratedLozengeTiling> out;
  for_each_decoration(t, [&](const DecoratedLozengeTiling& d) { out.push_back(d); }, node_budget);
  return out;
}

DecoratedLozengeTiling random_decorated_tiling(int a, int b, int c, std::uint64_t seed) {
  check_box(a, b, c);
  std::mt19937_64 rng(seed);
  LozengeTiling t;
  if (a * b + b * c + c * a <= kMaxLozengeEnumeration) {
    BigInt total = count_lozenge_tilings(a, b, c);
    std::uint64_t pick = detail::draw_below(rng, total.convert_to<std::uint64_t>());
    std::uint64_t k = 0;
    for_each_lozenge_tiling(a, b, c, [&](const LozengeTiling& x) {
      if (k++ == pick) t = x;
    });
  } else {
    std::vector<int> h(static_cast<std::size_t>(a) * b);
    for (int i = 0; i < a; ++i)
      for (int j = 0; j < b; ++j) {
        int cap = c;
        if (i > 0) cap = std::min(cap, h[(i - 1) * b + j]);
        if (j > 0) cap = std::min(cap, h[i * b + j - 1]);
        h[i * b + j] = static_cast<int>(detail::draw_below(rng, cap + 1));
      }
    t = tiling_from_heights(a, b, c, h);
  }
  Adjacency adj = adjacency(t.lozenges);
  std::vector<int> choice(t.lozenges.size(), -1);
  decorate(
      choice, adj, bfs_order(adj),
      [&](int) {
        std::vector<int> o{0, 1, 2, 3};
        detail::shuffle(o, rng);
        return o;
      },
      [] { return false; }, kDefaultNodeBudget);
  DecoratedLozengeTiling d{t, {}};
  for (int ch : choice) {
    if (ch < 0) throw Error("no valid decoration found");
    d.decorations.push_back(all_lozenge_decorations()[ch]);
  }
  return d;
}

DecoratedLozengeTiling pad_decorated(const DecoratedLozengeTiling& d) {
  std::string v = decoration_violation(d);
  if (!v.empty()) throw Error("invalid decorated tiling: " + v);
  const LozengeTiling& t = d.tiling;
  for (int grow = 1; grow <= 3; ++grow) {
    int A = t.a + grow, Bs = t.b + grow, C = t.c + grow;
    // Triangles of the bigger hexagon not covered by the original lozenges, in scan order.
    std::set<Tri> used;
    for (const Lozenge& l : t.lozenges)
      for (const Tri& tr : triangles_of(l)) used.insert(tr);
    std::vector<Tri> free_tris;
    for (int y = -C; y <= Bs; ++y)
      for (int x = -Bs - C; x <= A + C; ++x)
        for (bool up : {true, false}) {
          Tri tr{x, y, up};
          if (in_hexagon(tr, A, Bs, C) && !used.count(tr)) free_tris.push_back(tr);
        }
    std::set<Tri> open(free_tris.begin(), free_tris.end());

    std::vector<Lozenge> ls = t.lozenges;
    // Edge colours already fixed around the open region.
    std::map<EdgeKey, Colour> fixed;
    for (std::size_t i = 0; i < ls.size(); ++i) {
      auto vv = lozenge_vertices(ls[i]);
      auto col = lozenge_edge_colours(d.decorations[i]);
      for (int k = 0; k < 4; ++k) fixed[edge_key(vv[k], vv[(k + 1) % 4])] = col[k];
    }
    struct Step {
      Lozenge l;
      int dec;
    };
    // Candidate lozenges covering a given first-open triangle.
    auto candidates = [&](const Tri& tr) {
      std::vector<Lozenge> out;
      if (tr.up) {
        out = {{tr.x, tr.y, 0}, {tr.x, tr.y, 1}, {tr.x, tr.y, 2}};
      } else {
        out = {{tr.x, tr.y, 0}, {tr.x + 1, tr.y, 1}, {tr.x, tr.y + 1, 2}};
      }
      return out;
    };
    std::vector<Step> stack;
    std::vector<int> next_option;
    std::uint64_t nodes = 0;
    bool done = false, failed = false;
    next_option.push_back(0);
    while (!done && !failed) {
      auto first = std::find_if(free_tris.begin(), free_tris.end(), [&](const Tri& x) { return open.count(x) > 0; });
      if (first == free_tris.end()) {
        done = true;
        break;
      }
      auto cands = candidates(*first);
      bool placed = false;
      while (next_option.back() < 12) {
        int opt = next_option.back()++;
        Lozenge l = cands[opt / 4];
        int dec = opt % 4;
        auto tris = triangles_of(l);
        if (!open.count(tris[0]) || !open.count(tris[1])) continue;
        auto vv = lozenge_vertices(l);
        auto col = lozenge_edge_colours(all_lozenge_decorations()[dec]);
        bool ok = true;
        for (int k = 0; ok && k < 4; ++k) {
          auto it = fixed.find(edge_key(vv[k], vv[(k + 1) % 4]));
          if (it != fixed.end() && it->second == col[k]) ok = false;
        }
        if (!ok) continue;
        if (++nodes > kDefaultNodeBudget) throw BudgetExceeded("padding search exceeded its node budget");
        open.erase(tris[0]);
        open.erase(tris[1]);
        for (int k = 0; k < 4; ++k) {
          EdgeKey key = edge_key(vv[k], vv[(k + 1) % 4]);
          if (!fixed.count(key)) fixed[key] = col[k];
        }
        stack.push_back({l, dec});
        next_option.push_back(0);
        placed = true;
        break;
      }
      if (placed) continue;
      // Undo the last placement.
      next_option.pop_back();
      if (stack.empty()) {
        failed = true;
        break;
      }
      Step s = stack.back();
      stack.pop_back();
      auto tris = triangles_of(s.l);
      open.insert(tris[0]);
      open.insert(tris[1]);
      // Edges first coloured by this lozenge are those not shared with any other placed lozenge.
      auto vv = lozenge_vertices(s.l);
      std::set<EdgeKey> keep;
      for (const Lozenge& l : ls) {
        auto w = lozenge_vertices(l);
        for (int k = 0; k < 4; ++k) keep.insert(edge_key(w[k], w[(k + 1) % 4]));
      }
      for (const Step& o : stack) {
        auto w = lozenge_vertices(o.l);
        for (int k = 0; k < 4; ++k) keep.insert(edge_key(w[k], w[(k + 1) % 4]));
      }
      for (int k = 0; k < 4; ++k) {
        EdgeKey key = edge_key(vv[k], vv[(k + 1) % 4]);
        if (!keep.count(key)) fixed.erase(key);
      }
    }
    if (failed) continue;
    DecoratedLozengeTiling out{{A, Bs, C, ls}, d.decorations};
    for (const Step& s : stack) {
      out.tiling.lozenges.push_back(s.l);
      out.decorations.push_back(all_lozenge_decorations()[s.dec]);
    }
    return out;
  }
  throw Error("no decorated padding found around the tiling");
}

}  // namespace tia
