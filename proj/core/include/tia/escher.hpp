#pragma once

#include <string>
#include <vector>

#include "tia/wallpaper.hpp"

namespace tia {

enum class Polarity { Inward, Outward };
inline Polarity flipped(Polarity p) { return p == Polarity::Inward ? Polarity::Outward : Polarity::Inward; }
const char* to_string(Polarity p);

// A curve in edge-local coordinates (t, s): t runs along the edge from 0 to 1,
// s is the offset in edge lengths towards the side the curve first departs to.
struct DeformationCurve {
  enum class Kind { Polyline, Quadratic };
  Kind kind = Kind::Polyline;
  std::vector<Vec2> control;  // interior control points only
  int samples = 16;           // segment count for quadratic curves

  // All local samples including the pinned ends (0,0) and (1,0).
  std::vector<Vec2> local_points() const;

  static DeformationCurve midpoint_peak(double amplitude = 0.5);
  // Intermediate point above the start vertex (or the end vertex).
  static DeformationCurve endpoint_peak(double amplitude = 0.25, bool at_end = false);
  static DeformationCurve zigzag(double amplitude = 0.25);
  // Parabolic arc through the ends with apex offset `amplitude` at the midpoint.
  static DeformationCurve quadratic(double amplitude = 0.5, int samples = 16);
  static DeformationCurve polyline(std::vector<Vec2> interior);
};

struct PairDeformation {
  DeformationCurve curve;
  Polarity polarity = Polarity::Inward;
};

// One entry per edge pair of the domain, applied to the pair's representative edge.
struct DeformationAssignment {
  std::string group;
  std::vector<PairDeformation> pairs;
};

struct DeformedDomain {
  FundamentalDomain source;
  DeformationAssignment assignment;
  std::vector<Polyline2> edge_paths;  // counter-clockwise path per source edge
  Polyline2 boundary;                 // closed concatenation of the edge paths

  // Cleaned polygon pieces (slits removed, pinches split).
  std::vector<Polygon2> pieces() const;
  double area() const { return signed_area(boundary.points); }
};

// Maps a curve onto edge k of the domain with the requested polarity.
Polyline2 curve_on_edge(const DeformationCurve& c, Polarity p, const FundamentalDomain& d, int k);

// Inward if the first sample off the edge's supporting line lies on the interior side.
Polarity classify_polarity(const Polyline2& path, int edge, const FundamentalDomain& d);

DeformedDomain apply_escher(const FundamentalDomain& d, const WallpaperGroup& g,
                            const DeformationAssignment& a);
// Undeformed domain viewed as a deformed one (straight edge paths).
DeformedDomain undeformed(const FundamentalDomain& d);

DeformationAssignment obverse(const DeformationAssignment& a, std::size_t pair);

// No two orbit copies of the boundary cross within the window; touching is allowed.
bool validate_orbit_disjoint(const DeformedDomain& dd, const WallpaperGroup& g, const Polygon2& window);

// Named assignments used by the canonical blocks.
struct NamedDeformation {
  std::string group;
  double scale = 1.0;  // uniform scale of the canonical domain
  DeformationAssignment assignment;
};
NamedDeformation named_deformation(const std::string& name);
const std::vector<std::string>& named_deformations();
DeformedDomain build_named(const std::string& name);

}  // namespace tia
