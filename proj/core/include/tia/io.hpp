#pragma once

#include <string>
#include <vector>

#include "tia/assembly.hpp"

namespace tia {

// Text readers throw Error with a message naming the offending field or line.

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

// {"rows", "cols", "tiles": [[{"kind", "orient"}, ...], ...]}, one JSON line.
std::string tiling_to_json(const Tiling& t);
Tiling tiling_from_json(const std::string& text);

// rows + 1 lines of cols + 1 digits.
std::string colouring_to_text(const GridColouring& c);
GridColouring colouring_from_text(const std::string& text);

// {"a", "b", "c", "lozenges": [{"x", "y", "orient", "split"?, "decoration"?}]}.
// Decorations are written when present and read when every lozenge has one.
std::string lozenge_tiling_to_json(const DecoratedLozengeTiling& d);
DecoratedLozengeTiling lozenge_tiling_from_json(const std::string& text);

// {"group", "domain": {"scale"}, "pairs": [{"curve": {"kind", "params"}, "polarity"}]}.
// Curve kinds: midpoint_peak, endpoint_peak, zigzag, quadratic, polyline.
NamedDeformation assignment_from_json(const std::string& text);
std::string assignment_to_json(const NamedDeformation& n);

// {"region", "height", "placements": [{"block", "matrix" (4x4 row-major), "frame", "index"}]}.
std::string assembly_to_json(const Assembly& a);
Assembly assembly_from_json(const std::string& text);

std::string report_to_json(const SpaceFillingReport& r);

// "v x y z" and "f i j k" lines, 1-based, 15 significant digits.
std::string mesh_to_text(const TriMesh& m);
TriMesh mesh_from_text(const std::string& text);

// Top view: footprints at the top of the slab, frame placements outlined in red,
// the region dashed.
std::string assembly_svg(const Assembly& a);
// Cells with their black edge halves drawn thick.
std::string tiling_svg(const Tiling& t);

}  // namespace tia
