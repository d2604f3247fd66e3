#pragma once

#include <string>
#include <vector>

#include "tia/escher.hpp"

namespace tia {

struct Block {
  TriMesh mesh;
  std::vector<Polygon2> bottom;  // footprint at z = 0
  std::vector<Polygon2> top;     // footprint at z = height
  double height = 1.0;
  double domain_area = 0.0;
  std::string label;
};

// One planar layer of a loft: a path per source edge, all at height z.
struct LoftLayer {
  std::vector<std::vector<Vec2>> edge_paths;
  double z = 0;
};

// Ruled solid through the given layers (bottom first). Side walls pair points
// of consecutive layers by normalized arc length along each source edge.
Block loft_layers(const std::vector<LoftLayer>& layers, double domain_area, std::string label = {});

Block loft(const DeformedDomain& bottom, const DeformedDomain& top, double h, std::string label = {});
// Straight-edged footprints with equal vertex counts; edge k joins vertex k and k+1.
Block loft(const Polygon2& bottom, const Polygon2& top, double h, std::string label = {});
Block double_loft(const DeformedDomain& bottom, const DeformedDomain& top, double h, bool through_mid = true,
                  std::string label = {});

// Moves a block in the plane; reflections flip face orientation to stay outward.
Block transformed(const Isometry2& g, const Block& b);

// Canonical blocks by name; see canonical_block_names().
Block canonical_block(const std::string& name, double height = -1);
// Blocks used together: pg and p2gg mirror pairs, obverse pairs.
std::vector<Block> canonical_block_set(const std::string& name);
const std::vector<std::string>& canonical_block_names();

// Reflection that maps the first block of a pg/p2gg pair onto the second.
Isometry2 pair_alignment(const std::string& set_name);

double block_volume(const Block& b);

// Group and (scaled) fundamental domain a canonical block is built on; the
// block's bottom footprint is the domain itself.
struct BlockDomain {
  std::string group;
  WallpaperGroup wallpaper;
  FundamentalDomain domain;
  std::string deformation;  // named deformation of the top face, empty for the cube
};
BlockDomain block_domain(const std::string& name);
// Polarity of each domain edge on the top face of a single-loft block.
std::vector<Polarity> top_polarities(const std::string& name);

// Single-loft block for a user assignment on the canonical domain of its group,
// scaled by `scale`. Invalid assignments throw.
Block block_from_assignment(const NamedDeformation& n, double h = 1.0);

}  // namespace tia
