#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "tia/error.hpp"

namespace tia {

using BigInt = boost::multiprecision::cpp_int;

enum class TileKind { Bi, Quad, OctaSym, OctaAsym };
enum class Colour { Black, White };

const char* to_string(TileKind k);
TileKind parse_tile_kind(const std::string& s);
// Orientation codes accepted for a kind (Bi 4, Quad 2, Octa 4).
int orient_count(TileKind k);

// Bi: 0 black lower-left, 1 lower-right, 2 upper-right, 3 upper-left.
// Quad: 0 black top and bottom, 1 black left and right.
// Octa: orient k is the base pattern turned by k quarter turns counter-clockwise.
struct Tile {
  TileKind kind = TileKind::Bi;
  int orient = 0;
  bool operator==(const Tile&) const = default;
};

// Edges are numbered counter-clockwise from the bottom; the parameter t runs
// counter-clockwise too, so a right edge starts at its lower end.
enum TileEdge { kBottom = 0, kRight = 1, kTop = 2, kLeft = 3 };

struct ColourSegment {
  double t0 = 0, t1 = 1;
  Colour colour = Colour::White;
};
using EdgeColours = std::array<std::vector<ColourSegment>, 4>;

EdgeColours boundary_colours(const Tile& t);
// Quarter turns counter-clockwise.
Tile rotated(const Tile& t, int quarter_turns);
// Tiles with distinct colourings, in the fixed candidate order (Bi 0..3, Quad 0..1, Octa...).
std::vector<Tile> candidate_tiles(const std::vector<TileKind>& kinds);

struct Tiling {
  int rows = 0, cols = 0;
  std::vector<Tile> tiles;  // row-major, row 0 on top

  Tiling() = default;
  Tiling(int n, int m) : rows(n), cols(m), tiles(static_cast<std::size_t>(n) * m) {}
  Tile& at(int r, int c) { return tiles[static_cast<std::size_t>(r) * cols + c]; }
  const Tile& at(int r, int c) const { return tiles[static_cast<std::size_t>(r) * cols + c]; }
  bool operator==(const Tiling&) const = default;
};

// Opposite colours across the shared edge; `a` is left of or above `b`.
bool compatible_horizontal(const Tile& left, const Tile& right);
bool compatible_vertical(const Tile& above, const Tile& below);

bool is_valid_tiling(const Tiling& t);
// Human-readable description of the first offending edge, empty if valid.
std::string first_violation(const Tiling& t);

inline const std::vector<TileKind> kBiQuad{TileKind::Bi, TileKind::Quad};
constexpr std::uint64_t kDefaultNodeBudget = 5'000'000;

// Row-major backtracking over candidate_tiles(kinds). Throws BudgetExceeded once
// more than `node_budget` partial tilings have been visited.
std::uint64_t for_each_tiling(int n, int m, const std::vector<TileKind>& kinds,
                              const std::function<void(const Tiling&)>& visit,
                              std::uint64_t node_budget = kDefaultNodeBudget);
std::vector<Tiling> enumerate_tilings(int n, int m, const std::vector<TileKind>& kinds = kBiQuad,
                                      std::uint64_t node_budget = kDefaultNodeBudget);

using BigMatrix = std::vector<std::vector<BigInt>>;
BigMatrix build_transfer_matrix(int i);
// Number of valid n x m {Bi, Quad} tilings.
BigInt count_tilings(int n, int m);

// Vertex colours of an (n+1) x (m+1) grid, 0 blue, 1 green, 2 red.
struct GridColouring {
  int rows = 0, cols = 0;
  std::vector<int> colours;

  GridColouring() = default;
  GridColouring(int n, int m) : rows(n), cols(m), colours(static_cast<std::size_t>(n) * m) {}
  int& at(int r, int c) { return colours[static_cast<std::size_t>(r) * cols + c]; }
  int at(int r, int c) const { return colours[static_cast<std::size_t>(r) * cols + c]; }
  bool operator==(const GridColouring&) const = default;
};

// Edge rules in Z/3: a horizontal edge has black above iff right - left = 1,
// a vertical edge has black on the right iff bottom - top = 1.
GridColouring tiling_to_colouring(const Tiling& t);
Tiling colouring_to_tiling(const GridColouring& c);
std::string colouring_violation(const GridColouring& c);
BigInt count_grid_colourings(int rows, int cols);

// Seeded random valid tiling. {Bi, Quad} tilings are drawn uniformly through the
// colouring bijection when the shorter side is at most 10; other cases fall back
// to backtracking with a shuffled candidate order.
Tiling random_tiling(int n, int m, const std::vector<TileKind>& kinds, std::uint64_t seed);

// Surrounds a valid tiling with `ring` layers of tiles drawn from `kinds`.
Tiling extend_tiling(const Tiling& t, int ring, const std::vector<TileKind>& kinds);

// The 6 x 6 Versatile tiling with p4 symmetry (two alternating rows).
Tiling p4_versatile_tiling(int n, int m);

}  // namespace tia
