#pragma once

#include <array>
#include <vector>

#include "guarding/polygon.hpp"

namespace guarding {

using Triangle = std::array<Point2, 3>;

Rat triangle_area2(const Triangle& t);
Point2 triangle_centroid(const Triangle& t);

// p strictly inside t (t must have positive area).
bool point_in_triangle_strict(const Point2& p, const Triangle& t);
// p inside or on t.
bool point_in_triangle_closed(const Point2& p, const Triangle& t);

// Ear-clipping triangulation; every returned triangle has positive area and
// the union is the closed polygon.  Straight vertices are skipped.
std::vector<Triangle> triangulate(const SimplePolygon& poly);

}  // namespace guarding
