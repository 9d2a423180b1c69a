#pragma once

#include <optional>

#include "guarding/triangulate.hpp"
#include "guarding/visibility.hpp"

namespace guarding {

struct CoverageResult {
  bool covered = false;
  std::optional<Point2> witness;  // a point no region contains
};

// Exact test that the union of the guards' visibility regions covers the
// whole closed polygon.  Works by clipping a triangulation of the polygon
// against the region boundaries; the witness is the centroid of the
// lexicographically least leftover triangle, so reruns agree byte for byte.
CoverageResult uncovered_witness(const SimplePolygon& p,
                                 const std::vector<VisibleBoundary>& regions);

// Finite-target variant: the witness is the first listed target point that
// no region contains.
CoverageResult uncovered_witness(const SimplePolygon& p,
                                 const std::vector<VisibleBoundary>& regions,
                                 const std::vector<Point2>& targets);

}  // namespace guarding
