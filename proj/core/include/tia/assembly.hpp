#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "tia/blocks.hpp"
#include "tia/complex.hpp"
#include "tia/lozenge.hpp"
#include "tia/truchet.hpp"

namespace tia {

// A canonical block moved in the plane; z is untouched so every placement
// stays in the slab [0, height].
struct Placement {
  std::string block;
  Isometry2 transform;
  std::array<int, 3> index{0, 0, 0};  // grid (row, col, 0), orbit (i, j, coset) or face (id, 0, 0)
};

struct Assembly {
  std::vector<Placement> placements;
  Polygon2 region;
  double height = 1.0;
  std::vector<int> frame;

  // Block geometry by name at the assembly height (built on demand, shared).
  const Block& block(const std::string& name) const;

 private:
  mutable std::map<std::string, std::shared_ptr<const Block>> cache_;
};

// Bi k -> versatile turned (k - 1) quarter turns, Quad k -> bisquare_unit turned k,
// OctaSym -> zigzag_sym, OctaAsym k -> zigzag_asym turned k. Cell (r, c) is centred
// at (c, rows - 1 - r); the region is the union of the cells.
struct TilePlacement {
  std::string block;
  int quarter_turns = 0;
};
TilePlacement tile_block(const Tile& t);

// `ring` extra layers of tiles are added around the tiling (never changing it) so
// that deformed boundaries of the outer blocks are matched; the region stays the
// original rectangle.
Assembly tiling_to_assembly(const Tiling& t, double h = 1.0, int ring = 0);

// Bi 0 -> rhom, Bi 1 -> rhom turned half way about the lozenge centre,
// Quad 0 -> rhom_obverse, Quad 1 -> rhom_obverse mirrored in its long diagonal.
TilePlacement lozenge_block(const DecoratedLozenge& d);
Isometry2 lozenge_local_transform(const DecoratedLozenge& d);
// `pad` true surrounds the tiling with one decorated layer; the region is the original hexagon.
Assembly lozenge_assembly(const DecoratedLozengeTiling& d, double h = 1.0, bool pad = false);

// Each face receives the first listed block whose top polarities can be laid onto
// the face colouring by an isometry (rotations tried before reflections).
Assembly complex_assembly(const TilingComplex& c, const ComplexColouring& col, SnubVariant v, double h = 1.0);
std::vector<std::string> snub_blocks(SnubVariant v, const std::string& kind);

// One placement per group element whose image of the fundamental domain meets the
// window expanded by `pad`; the region is the window. Improper elements place the
// mirrored partner (second block) with a proper transform.
Assembly orbit_assembly(const WallpaperGroup& g, const std::vector<std::string>& blocks, const Polygon2& window,
                        double h = 1.0, double pad = 0.0);
Polygon2 rectangle_window(double x0, double y0, double x1, double y1);

// Placement footprints at the bottom and top of the slab.
std::vector<Polygon2> footprint(const Assembly& a, std::size_t placement);

Assembly select_frame(const Assembly& a);

struct SpaceFillingReport {
  bool pass = true;
  std::vector<double> z;
  std::vector<double> deficit;      // region area minus covered area, per z
  std::vector<double> max_overlap;  // largest pairwise overlap, per z
  double region_area = 0;
};

// {0, 1/4, 1/2, 3/4, 1} * h plus `extra` seeded interior samples.
std::vector<double> default_z_samples(double h, int extra = 4, std::uint64_t seed = 0);
SpaceFillingReport verify_space_filling(const Assembly& a, const std::vector<double>& z_samples, double tol = 1e-6);

// All placed meshes in one mesh, in placement order.
TriMesh assembly_mesh(const Assembly& a);

// Placements of `a` and `b` pair up one to one with equal blocks and transforms.
bool same_placements(const Assembly& a, const Assembly& b, double tol = 1e-9);

}  // namespace tia
