#pragma once

#include <vector>

#include "guarding/polygon.hpp"

namespace guarding {

struct PointOutside : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Where an infinitesimal step from boundary point b in direction d lands.
enum class ConeStep { Enters, Along, Exits };
ConeStep boundary_cone(const SimplePolygon& p, const BoundaryPoint& b,
                       const Point2& d);

// One visible boundary contact along a ray: either a single point
// (t0 == t1) or a maximal collinear run the ray travels along.
struct RayPiece {
  Rat t0, t1;
  BoundaryPoint b0, b1;  // b0 at t0, b1 at t1; for runs, perimeter-ordered ends
  BoundaryArc arc;       // the contacted sub-arc (a point when t0 == t1)
};

struct RayWalk {
  Rat t_star;  // farthest parameter whose segment from the origin stays in P
  std::vector<RayPiece> pieces;  // ascending t, all visible (t1 <= t_star)
};

// Walks the ray origin + t*d, t >= 0, through the closed polygon.  The origin
// must lie in the closed polygon and d must be nonzero.
RayWalk ray_walk(const SimplePolygon& p, const Point2& origin, const Point2& d);

// Closed-segment visibility: the whole segment g..q stays inside the closed
// polygon (grazing reflex vertices and running along edges both count).
// Throws PointOutside if either endpoint is outside.
bool sees(const SimplePolygon& p, const Point2& g, const Point2& q);

// A maximal visible piece of the boundary, as seen from one source point.
struct VisItem {
  BoundaryArc arc;   // Span (a == b for an isolated point) or Whole
  bool needle;       // visible only along a single ray (zero angular width)
  Point2 dir_a, dir_b;  // directions from the source to the arc's two ends
};

// Silhouette record: the boundary disappears behind `at`.  `left` means the
// occluded stretch continues forward (in traversal order) from `at`;
// otherwise it arrives from behind.
struct Tangency {
  BoundaryPoint at;
  bool left;
};

struct VisibleBoundary {
  Point2 source;
  std::vector<VisItem> items;      // disjoint, maximal, perimeter order
  std::vector<Tangency> tangents;
  std::vector<Point2> region;      // visibility polygon; needle excursions
                                   // appear as out-and-back vertex runs
};

// Full angular sweep around x (interior or boundary).  Throws PointOutside.
VisibleBoundary visible_boundary(const SimplePolygon& p, const Point2& x);

// Twice the area of the region (needle excursions cancel).
Rat region_area2(const VisibleBoundary& vb);

// Membership in the closed visibility region; agrees with sees(source, q).
bool region_contains(const VisibleBoundary& vb, const Point2& q);

// Some visible piece meets the target arc.
bool weakly_sees_arc(const VisibleBoundary& vb, const BoundaryArc& target);

// Per-arc labels against a list of closed arcs that tile the boundary in
// traversal order (consecutive arcs share endpoints).
struct ArcLabel {
  bool seen = false;
  bool left_tangent = false;
  bool right_tangent = false;
  bool owns = false;  // visible part of the arc spans an angle >= pi
};
std::vector<ArcLabel> classify_arcs(const SimplePolygon& p,
                                    const VisibleBoundary& vb,
                                    const std::vector<BoundaryArc>& arcs);

}  // namespace guarding
