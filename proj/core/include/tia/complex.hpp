#pragma once

#include <array>
#include <string>
#include <vector>

#include "tia/euclid.hpp"
#include "tia/truchet.hpp"

namespace tia {

// Planar complex of convex faces with unit edges, counter-clockwise vertices and
// per-edge neighbour links (face index and edge index, -1 on the outside).
struct ComplexFace {
  Polygon2 polygon;
  std::string kind;  // "square" or "lozenge"
  int cell_x = 0, cell_y = 0;
  int slot = 0;  // position within the translation cell
  std::vector<std::pair<int, int>> neighbours;
};

struct TilingComplex {
  std::vector<ComplexFace> faces;
  double cell = 0;  // side of the square translation cell
  int n = 0;        // cells per side of the core window
  Polygon2 window;  // square [-cell/4, -cell/4 + n*cell]^2
};

// Squares and paired triangles of the snub square tiling on n x n translation
// cells, plus `pad` extra cells on every side.
TilingComplex snub_square_complex(int n, int pad = 0);

// Black marks the edges pushed into a face.
using ComplexColouring = std::vector<std::vector<Colour>>;

std::string complex_violation(const TilingComplex& c, const ComplexColouring& col);

enum class SnubVariant { RhomPair, VersatileTriple };
const char* to_string(SnubVariant v);
SnubVariant parse_snub_variant(const std::string& s);

// Every square has two adjacent black edges. RhomPair lozenges are black on the
// two edges at an acute corner or on opposite edges; VersatileTriple lozenges on
// opposite edges only. The colouring repeats with the translation cell.
ComplexColouring snub_square_colouring(const TilingComplex& c, SnubVariant v);

}  // namespace tia
