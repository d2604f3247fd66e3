#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "tia/euclid.hpp"
#include "tia/truchet.hpp"

namespace tia {

// Triangular lattice with basis u = (1, 0), w = (1/2, sqrt(3)/2).
Vec2 lattice_point(int x, int y);

// orient 0: spanned by u and w; 1: by u and w - u; 2: by w and u - w.
struct Lozenge {
  int x = 0, y = 0, orient = 0;
  bool operator==(const Lozenge&) const = default;
};

// Lattice vertices v0..v3 in the order of the canonical p3 lozenge
// (0,0), (1/2,-sqrt3/2), (1,0), (1/2,sqrt3/2); edge k joins v_k and v_{k+1}.
std::array<std::array<int, 2>, 4> lozenge_vertices(const Lozenge& l);
Polygon2 lozenge_polygon(const Lozenge& l);
// Rotation plus translation carrying the canonical lozenge onto l, vertex for vertex.
Isometry2 lozenge_placement(const Lozenge& l);

struct LozengeTiling {
  int a = 0, b = 0, c = 0;
  std::vector<Lozenge> lozenges;
};

// Hexagon with side lengths a, b, c, a, b, c in lattice units.
Polygon2 lozenge_hexagon(int a, int b, int c);

// Heights of a plane partition in an a x b box (row-major, entries <= c,
// non-increasing along rows and columns) drawn as a stepped surface.
LozengeTiling tiling_from_heights(int a, int b, int c, const std::vector<int>& heights);
// Exact triangle-level check that the lozenges partition the hexagon.
bool is_lozenge_partition(const LozengeTiling& t);

constexpr int kMaxLozengeEnumeration = 60;  // ab + bc + ca
std::uint64_t for_each_lozenge_tiling(int a, int b, int c, const std::function<void(const LozengeTiling&)>& visit);
std::vector<LozengeTiling> enumerate_lozenge_tilings(int a, int b, int c);

// Box formula with running indices: prod (i+j+k-1)/(i+j+k-2).
BigInt count_lozenge_tilings(int a, int b, int c);
// The same product with the factor frozen at (a+b+c-1)/(a+b+c-2).
boost::multiprecision::cpp_rational fixed_factor_lozenge_formula(int a, int b, int c);

enum class LozengeSplit { Bi, Quad };
const char* to_string(LozengeSplit s);
LozengeSplit parse_lozenge_split(const std::string& s);

// Local edges 0..3 are e_d, e_c, e_b, e_a of the canonical lozenge.
// Bi 0 black on e_a, e_b; Bi 1 on e_c, e_d; Quad 0 on e_a, e_c; Quad 1 on e_b, e_d.
struct DecoratedLozenge {
  LozengeSplit split = LozengeSplit::Bi;
  int orient = 0;
  bool operator==(const DecoratedLozenge&) const = default;
};
std::array<Colour, 4> lozenge_edge_colours(const DecoratedLozenge& d);
const std::array<DecoratedLozenge, 4>& all_lozenge_decorations();

struct DecoratedLozengeTiling {
  LozengeTiling tiling;
  std::vector<DecoratedLozenge> decorations;  // parallel to tiling.lozenges
};

std::string decoration_violation(const DecoratedLozengeTiling& d);
bool is_valid_decoration(const DecoratedLozengeTiling& d);

std::uint64_t for_each_decoration(const LozengeTiling& t,
                                  const std::function<void(const DecoratedLozengeTiling&)>& visit,
                                  std::uint64_t node_budget = kDefaultNodeBudget);
std::vector<DecoratedLozengeTiling> enumerate_decorations(const LozengeTiling& t,
                                                          std::uint64_t node_budget = kDefaultNodeBudget);

// Seeded tiling (uniform when enumeration is in range) with a seeded valid decoration.
DecoratedLozengeTiling random_decorated_tiling(int a, int b, int c, std::uint64_t seed);

// Embeds the tiling in the (a+1) x (b+1) x (c+1) hexagon and decorates the new
// lozenges so that every original edge becomes interior. Original lozenges keep
// their positions and decorations.
DecoratedLozengeTiling pad_decorated(const DecoratedLozengeTiling& d);

}  // namespace tia
