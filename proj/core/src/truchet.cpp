#include "tia/truchet.hpp"

#include <algorithm>
#include <random>

#include "random.hpp"

namespace tia {

using detail::draw_below;
using detail::draw_unit;

namespace {

// Per edge two bits: bit 0 = first half black, bit 1 = second half black.
using Pattern = std::array<int, 4>;
constexpr int B = 3, W = 0, BW = 1, WB = 2;

Pattern base_pattern(TileKind k) {
  switch (k) {
    case TileKind::Bi: return {B, W, W, B};
    case TileKind::Quad: return {B, W, B, W};
    case TileKind::OctaSym: return {BW, BW, BW, BW};
    case TileKind::OctaAsym: return {WB, BW, BW, WB};
  }
  return {};
}

Pattern pattern(const Tile& t) {
  Pattern p = base_pattern(t.kind), r{};
  for (int e = 0; e < 4; ++e) r[(e + t.orient) % 4] = p[e];
  return r;
}

// Halves along a shared edge run in opposite directions, so half i of one side
// meets half 1 - i of the other.
bool opposite(int a, int b) {
  int rb = ((b & 1) << 1) | ((b >> 1) & 1);
  return (a ^ rb) == 3;
}

void check_tile(const Tile& t) {
  if (t.orient < 0 || t.orient >= orient_count(t.kind))
    throw Error(std::string("orientation ") + std::to_string(t.orient) + " out of range for " + to_string(t.kind));
}

int mod3(int x) { return ((x % 3) + 3) % 3; }

}  // namespace

const char* to_string(TileKind k) {
  switch (k) {
    case TileKind::Bi: return "bi";
    case TileKind::Quad: return "quad";
    case TileKind::OctaSym: return "octa_sym";
    case TileKind::OctaAsym: return "octa_asym";
  }
  return "?";
}

TileKind parse_tile_kind(const std::string& s) {
  for (TileKind k : {TileKind::Bi, TileKind::Quad, TileKind::OctaSym, TileKind::OctaAsym})
    if (s == to_string(k)) return k;
  throw Error("unknown tile kind '" + s + "'");
}

int orient_count(TileKind k) { return k == TileKind::Quad ? 2 : 4; }

EdgeColours boundary_colours(const Tile& t) {
  check_tile(t);
  Pattern p = pattern(t);
  EdgeColours out;
  for (int e = 0; e < 4; ++e) {
    Colour c0 = (p[e] & 1) ? Colour::Black : Colour::White;
    Colour c1 = (p[e] & 2) ? Colour::Black : Colour::White;
    if (t.kind == TileKind::Bi || t.kind == TileKind::Quad)
      out[e] = {{0.0, 1.0, c0}};
    else
      out[e] = {{0.0, 0.5, c0}, {0.5, 1.0, c1}};
  }
  return out;
}

Tile rotated(const Tile& t, int quarter_turns) {
  int n = orient_count(t.kind);
  return {t.kind, ((t.orient + quarter_turns) % n + n) % n};
}

std::vector<Tile> candidate_tiles(const std::vector<TileKind>& kinds) {
  std::vector<Tile> out;
  for (TileKind k : {TileKind::Bi, TileKind::Quad, TileKind::OctaSym, TileKind::OctaAsym}) {
    if (std::find(kinds.begin(), kinds.end(), k) == kinds.end()) continue;
    // The pinwheel looks the same after a quarter turn.
    int n = k == TileKind::OctaSym ? 1 : orient_count(k);
    for (int o = 0; o < n; ++o) out.push_back({k, o});
  }
  return out;
}

bool compatible_horizontal(const Tile& left, const Tile& right) {
  return opposite(pattern(left)[kRight], pattern(right)[kLeft]);
}

bool compatible_vertical(const Tile& above, const Tile& below) {
  return opposite(pattern(above)[kBottom], pattern(below)[kTop]);
}

std::string first_violation(const Tiling& t) {
  if (t.rows <= 0 || t.cols <= 0) return "tiling must have positive dimensions";
  if (t.tiles.size() != static_cast<std::size_t>(t.rows) * t.cols) return "tile count does not match dimensions";
  for (const Tile& x : t.tiles)
    if (x.orient < 0 || x.orient >= orient_count(x.kind)) return std::string("bad orientation for ") + to_string(x.kind);
  for (int r = 0; r < t.rows; ++r)
    for (int c = 0; c < t.cols; ++c) {
      auto where = [&](int rr, int cc) { return "(" + std::to_string(rr) + "," + std::to_string(cc) + ")"; };
      if (c + 1 < t.cols && !compatible_horizontal(t.at(r, c), t.at(r, c + 1)))
        return "like colours meet between tiles " + where(r, c) + " and " + where(r, c + 1);
      if (r + 1 < t.rows && !compatible_vertical(t.at(r, c), t.at(r + 1, c)))
        return "like colours meet between tiles " + where(r, c) + " and " + where(r + 1, c);
    }
  return {};
}

bool is_valid_tiling(const Tiling& t) { return first_violation(t).empty(); }

std::uint64_t for_each_tiling(int n, int m, const std::vector<TileKind>& kinds,
                              const std::function<void(const Tiling&)>& visit, std::uint64_t node_budget) {
  if (n < 1 || m < 1) throw Error("tiling dimensions must be positive");
  for (TileKind k : kinds)
    if (k != TileKind::Bi && k != TileKind::Quad) throw Error("enumeration supports bi and quad tiles only");
  std::vector<Tile> cand = candidate_tiles(kinds);
  std::vector<Pattern> pat;
  for (const Tile& t : cand) pat.push_back(pattern(t));
  Tiling cur(n, m);
  std::vector<int> choice(static_cast<std::size_t>(n) * m, -1);
  std::uint64_t nodes = 0, found = 0;
  int cells = n * m, pos = 0;
  while (pos >= 0) {
    if (pos == cells) {
      ++found;
      if (visit) visit(cur);
      --pos;
      continue;
    }
    int r = pos / m, c = pos % m;
    int k = choice[pos] + 1;
    for (; k < static_cast<int>(cand.size()); ++k) {
      if (c > 0 && !opposite(pat[choice[pos - 1]][kRight], pat[k][kLeft])) continue;
      if (r > 0 && !opposite(pat[choice[pos - m]][kBottom], pat[k][kTop])) continue;
      break;
    }
    if (k == static_cast<int>(cand.size())) {
      choice[pos] = -1;
      --pos;
      continue;
    }
    if (++nodes > node_budget)
      throw BudgetExceeded("enumeration exceeded the node budget of " + std::to_string(node_budget) +
                           "; use count_tilings for the number only");
    choice[pos] = k;
    cur.at(r, c) = cand[k];
    ++pos;
  }
  return found;
}

std::vector<Tiling> enumerate_tilings(int n, int m, const std::vector<TileKind>& kinds, std::uint64_t node_budget) {
  std::vector<Tiling> out;
  for_each_tiling(n, m, kinds, [&](const Tiling& t) { out.push_back(t); }, node_budget);
  return out;
}

BigMatrix build_transfer_matrix(int i) {
  if (i < 1) throw Error("transfer matrix index must be at least 1");
  if (i > 20) throw Error("transfer matrix index above 20 is not supported");
  BigMatrix M{{1}};
  for (int k = 1; k < i; ++k) {
    std::size_t s = M.size();
    BigMatrix N(2 * s, std::vector<BigInt>(2 * s, 0));
    for (std::size_t a = 0; a < s; ++a)
      for (std::size_t b = 0; b < s; ++b) {
        N[a][b] = M[a][b];
        N[a][s + b] = M[b][a];
        N[s + a][s + b] = M[a][b];
      }
    M = std::move(N);
  }
  return M;
}

namespace {

// Non-zero positions of M(i); every entry of M(i) is 0 or 1.
std::vector<std::pair<std::uint32_t, std::uint32_t>> transfer_support(int i) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> nz{{0, 0}};
  for (int k = 1; k < i; ++k) {
    std::uint32_t h = 1u << (k - 1);
    std::size_t n = nz.size();
    for (std::size_t j = 0; j < n; ++j) {
      auto [a, b] = nz[j];
      nz.push_back({b, a + h});      // upper right block holds the transpose
      nz.push_back({a + h, b + h});  // lower right block repeats M
    }
  }
  return nz;
}

}  // namespace

BigInt count_tilings(int n, int m) {
  if (n < 1 || m < 1) throw Error("tiling dimensions must be positive");
  if (m > n) std::swap(n, m);  // the count is symmetric; keep the matrix small
  if (m + 1 > 20) throw Error("tilings wider than 19 in both directions are not supported");
  // Rows of tiles are transfer steps with M + M^t; the matrix index is the vertex count of a row.
  auto nz = transfer_support(m + 1);
  std::size_t s = std::size_t{1} << m;
  std::vector<BigInt> v(s, 1);
  for (int step = 0; step < n; ++step) {
    std::vector<BigInt> w(s, 0);
    for (auto [a, b] : nz) {
      w[a] += v[b];
      w[b] += v[a];
    }
    v = std::move(w);
  }
  BigInt sum = 0;
  for (const auto& x : v) sum += x;
  return sum;
}

std::string colouring_violation(const GridColouring& c) {
  if (c.rows < 1 || c.cols < 1) return "colouring must have positive dimensions";
  if (c.colours.size() != static_cast<std::size_t>(c.rows) * c.cols) return "colour count does not match dimensions";
  for (int r = 0; r < c.rows; ++r)
    for (int k = 0; k < c.cols; ++k) {
      auto where = [&](int rr, int cc) { return "(" + std::to_string(rr) + "," + std::to_string(cc) + ")"; };
      int x = c.at(r, k);
      if (x < 0 || x > 2) return "colour out of range at " + where(r, k);
      if (k + 1 < c.cols && x == c.at(r, k + 1)) return "equal colours at " + where(r, k) + " and " + where(r, k + 1);
      if (r + 1 < c.rows && x == c.at(r + 1, k)) return "equal colours at " + where(r, k) + " and " + where(r + 1, k);
    }
  if (c.at(0, 0) != 0) return "colour at (0,0) must be 0";
  return {};
}

GridColouring tiling_to_colouring(const Tiling& t) {
  std::string v = first_violation(t);
  if (!v.empty()) throw Error("invalid tiling: " + v);
  for (const Tile& x : t.tiles)
    if (x.kind != TileKind::Bi && x.kind != TileKind::Quad) throw Error("colourings exist for bi and quad tiles only");
  GridColouring c(t.rows + 1, t.cols + 1);
  auto black = [&](int r, int k, int e) { return pattern(t.at(r, k))[e] == B; };
  c.at(0, 0) = 0;
  for (int k = 0; k < t.cols; ++k) c.at(0, k + 1) = mod3(c.at(0, k) + (black(0, k, kTop) ? 2 : 1));
  for (int r = 0; r < t.rows; ++r) {
    c.at(r + 1, 0) = mod3(c.at(r, 0) + (black(r, 0, kLeft) ? 1 : 2));
    for (int k = 0; k < t.cols; ++k) c.at(r + 1, k + 1) = mod3(c.at(r + 1, k) + (black(r, k, kBottom) ? 1 : 2));
  }
  // Every tile has consistent edge differences, so the remaining edges agree.
  for (int r = 0; r < t.rows; ++r)
    for (int k = 0; k < t.cols; ++k) {
      bool right = mod3(c.at(r + 1, k + 1) - c.at(r, k + 1)) == 2;
      bool top = mod3(c.at(r, k + 1) - c.at(r, k)) == 2;
      if (right != black(r, k, kRight) || top != black(r, k, kTop))
        throw Error("colouring propagation failed at tile (" + std::to_string(r) + "," + std::to_string(k) + ")");
    }
  return c;
}

Tiling colouring_to_tiling(const GridColouring& c) {
  std::string v = colouring_violation(c);
  if (!v.empty()) throw Error("improper colouring: " + v);
  if (c.rows < 2 || c.cols < 2) throw Error("colouring needs at least 2 x 2 vertices");
  Tiling t(c.rows - 1, c.cols - 1);
  std::vector<Tile> cand = candidate_tiles(kBiQuad);
  for (int r = 0; r < t.rows; ++r)
    for (int k = 0; k < t.cols; ++k) {
      int tl = c.at(r, k), tr = c.at(r, k + 1), bl = c.at(r + 1, k), br = c.at(r + 1, k + 1);
      Pattern want{};
      want[kBottom] = mod3(br - bl) == 1 ? B : W;
      want[kTop] = mod3(tr - tl) == 2 ? B : W;
      want[kRight] = mod3(br - tr) == 2 ? B : W;
      want[kLeft] = mod3(bl - tl) == 1 ? B : W;
      auto it = std::find_if(cand.begin(), cand.end(), [&](const Tile& x) { return pattern(x) == want; });
      if (it == cand.end()) throw Error("face has no matching tile");
      t.at(r, k) = *it;
    }
  return t;
}

BigInt count_grid_colourings(int rows, int cols) {
  if (rows < 1 || cols < 1) throw Error("grid dimensions must be positive");
  if (rows * cols > 25) throw Error("grid too large for exhaustive colouring count (rows*cols <= 25)");
  int n = rows * cols;
  std::vector<int> col(n, -1);
  std::uint64_t count = 0;
  int pos = 1;
  col[0] = 0;
  if (n == 1) return 1;
  while (pos >= 1) {
    if (pos == n) {
      ++count;
      --pos;
      continue;
    }
    int r = pos / cols, k = pos % cols;
    int x = col[pos] + 1;
    for (; x < 3; ++x) {
      if (k > 0 && col[pos - 1] == x) continue;
      if (r > 0 && col[pos - cols] == x) continue;
      break;
    }
    if (x == 3) {
      col[pos] = -1;
      --pos;
      continue;
    }
    col[pos] = x;
    ++pos;
  }
  return count;
}

namespace {

// Uniform proper colouring of a rows x cols grid with colour(0,0) = 0, by
// completion counts over row states (normalised per row to stay in range).
GridColouring uniform_colouring(int rows, int cols, std::mt19937_64& rng) {
  std::vector<std::vector<int>> states;
  std::vector<int> cur(cols);
  std::function<void(int)> gen = [&](int k) {
    if (k == cols) {
      states.push_back(cur);
      return;
    }
    for (int x = 0; x < 3; ++x) {
      if (k > 0 && cur[k - 1] == x) continue;
      cur[k] = x;
      gen(k + 1);
    }
  };
  gen(0);
  std::vector<std::vector<int>> next(states.size());
  for (std::size_t a = 0; a < states.size(); ++a)
    for (std::size_t b = 0; b < states.size(); ++b) {
      bool ok = true;
      for (int k = 0; ok && k < cols; ++k) ok = states[a][k] != states[b][k];
      if (ok) next[a].push_back(static_cast<int>(b));
    }
  std::vector<std::vector<double>> w(rows, std::vector<double>(states.size(), 1.0));
  for (int r = rows - 2; r >= 0; --r) {
    double mx = 0;
    for (std::size_t a = 0; a < states.size(); ++a) {
      double s = 0;
      for (int b : next[a]) s += w[r + 1][b];
      w[r][a] = s;
      mx = std::max(mx, s);
    }
    for (auto& x : w[r]) x /= mx;
  }
  auto pick = [&](const std::vector<int>& options, const std::vector<double>& weight) {
    double total = 0;
    for (int o : options) total += weight[o];
    double u = draw_unit(rng) * total;
    for (int o : options) {
      u -= weight[o];
      if (u < 0) return o;
    }
    return options.back();
  };
  std::vector<int> first;
  for (std::size_t a = 0; a < states.size(); ++a)
    if (states[a][0] == 0) first.push_back(static_cast<int>(a));
  GridColouring c(rows, cols);
  int s = pick(first, w[0]);
  for (int r = 0; r < rows; ++r) {
    if (r > 0) s = pick(next[s], w[r]);
    for (int k = 0; k < cols; ++k) c.at(r, k) = states[s][k];
  }
  return c;
}

// Fills the unset cells (row-major) by backtracking; `order` returns the candidate
// order for a cell. Throws if no completion exists within the budget.
void complete_tiling(Tiling& t, std::vector<bool> fixed, const std::vector<Tile>& cand,
                     const std::function<std::vector<int>(int)>& order, std::uint64_t budget) {
  int cells = t.rows * t.cols;
  std::vector<int> free_cells;
  for (int i = 0; i < cells; ++i)
    if (!fixed[i]) free_cells.push_back(i);
  std::vector<std::vector<int>> orders(free_cells.size());
  std::vector<int> idx(free_cells.size(), -1);
  std::vector<bool> set = fixed;
  auto fits = [&](int cell, const Tile& x) {
    int r = cell / t.cols, c = cell % t.cols;
    if (c > 0 && set[cell - 1] && !compatible_horizontal(t.at(r, c - 1), x)) return false;
    if (c + 1 < t.cols && set[cell + 1] && !compatible_horizontal(x, t.at(r, c + 1))) return false;
    if (r > 0 && set[cell - t.cols] && !compatible_vertical(t.at(r - 1, c), x)) return false;
    if (r + 1 < t.rows && set[cell + t.cols] && !compatible_vertical(x, t.at(r + 1, c))) return false;
    return true;
  };
  std::uint64_t nodes = 0;
  int pos = 0, total = static_cast<int>(free_cells.size());
  while (pos < total) {
    if (pos < 0) throw Error("no valid tile arrangement exists for the requested cells");
    int cell = free_cells[pos];
    if (idx[pos] < 0) orders[pos] = order(cell);
    set[cell] = false;
    int k = idx[pos] + 1;
    for (; k < static_cast<int>(orders[pos].size()); ++k)
      if (fits(cell, cand[orders[pos][k]])) break;
    if (k == static_cast<int>(orders[pos].size())) {
      idx[pos] = -1;
      --pos;
      continue;
    }
    if (++nodes > budget) throw BudgetExceeded("tile search exceeded its node budget");
    idx[pos] = k;
    t.tiles[cell] = cand[orders[pos][k]];
    set[cell] = true;
    ++pos;
  }
}

}  // namespace

Tiling random_tiling(int n, int m, const std::vector<TileKind>& kinds, std::uint64_t seed) {
  if (n < 1 || m < 1) throw Error("tiling dimensions must be positive");
  if (kinds.empty()) throw Error("no tile kinds given");
  std::mt19937_64 rng(seed);
  std::vector<TileKind> sorted = kinds;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (sorted == kBiQuad && std::min(n, m) <= 10) {
    if (m <= n) return colouring_to_tiling(uniform_colouring(n + 1, m + 1, rng));
    // Sample the transposed grid; transposition keeps colourings proper.
    GridColouring ct = uniform_colouring(m + 1, n + 1, rng);
    GridColouring c(n + 1, m + 1);
    for (int r = 0; r <= n; ++r)
      for (int k = 0; k <= m; ++k) c.at(r, k) = ct.at(k, r);
    return colouring_to_tiling(c);
  }
  std::vector<Tile> cand = candidate_tiles(sorted);
  Tiling t(n, m);
  complete_tiling(
      t, std::vector<bool>(static_cast<std::size_t>(n) * m, false), cand,
      [&](int) {
        std::vector<int> o(cand.size());
        for (std::size_t i = 0; i < o.size(); ++i) o[i] = static_cast<int>(i);
        detail::shuffle(o, rng);
        return o;
      },
      kDefaultNodeBudget);
  return t;
}

Tiling extend_tiling(const Tiling& t, int ring, const std::vector<TileKind>& kinds) {
  std::string v = first_violation(t);
  if (!v.empty()) throw Error("invalid tiling: " + v);
  if (ring < 0) throw Error("ring width must be non-negative");
  Tiling big(t.rows + 2 * ring, t.cols + 2 * ring);
  std::vector<bool> fixed(big.tiles.size(), false);
  for (int r = 0; r < t.rows; ++r)
    for (int c = 0; c < t.cols; ++c) {
      big.at(r + ring, c + ring) = t.at(r, c);
      fixed[static_cast<std::size_t>(r + ring) * big.cols + c + ring] = true;
    }
  std::vector<Tile> cand = candidate_tiles(kinds);
  complete_tiling(
      big, fixed, cand,
      [&](int) {
        std::vector<int> o(cand.size());
        for (std::size_t i = 0; i < o.size(); ++i) o[i] = static_cast<int>(i);
        return o;
      },
      kDefaultNodeBudget);
  return big;
}

Tiling p4_versatile_tiling(int n, int m) {
  Tiling t(n, m);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < m; ++c) {
      static const int even[2] = {0, 3}, odd[2] = {1, 2};
      t.at(r, c) = {TileKind::Bi, (r % 2 == 0 ? even : odd)[c % 2]};
    }
  return t;
}

}  // namespace tia
