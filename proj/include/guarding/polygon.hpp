#pragma once

#include <optional>
#include <string>
#include <vector>

#include "guarding/geometry.hpp"

namespace guarding {

enum class PolygonDefect {
  TooFewVertices,
  DuplicateConsecutiveVertex,
  Spike,             // boundary folds back on itself at a vertex
  SelfIntersection,  // two non-adjacent edges touch or cross
  ZeroArea,
};

struct PolygonError : std::runtime_error {
  PolygonDefect defect;
  int edge_a = -1, edge_b = -1;
  PolygonError(PolygonDefect d, std::string msg, int ea = -1, int eb = -1)
      : std::runtime_error(std::move(msg)), defect(d), edge_a(ea), edge_b(eb) {}
};

enum class Location { Interior, Boundary, Exterior };

// A validated simple polygon.  Vertices are stored counterclockwise; all
// boundary traversal in the library (fragments, arcs, tangent handedness)
// follows this stored order.  Consecutive collinear edges are legal.
class SimplePolygon {
 public:
  // Validates and normalizes orientation.  Throws PolygonError.
  static SimplePolygon make(std::vector<Point2> vertices);

  int size() const { return static_cast<int>(verts_.size()); }
  const Point2& vertex(int i) const { return verts_[wrap(i)]; }
  const std::vector<Point2>& vertices() const { return verts_; }

  // Edge i runs from vertex i to vertex i+1.
  std::pair<Point2, Point2> edge(int i) const {
    return {vertex(i), vertex(i + 1)};
  }

  // Twice the (positive) enclosed area.
  const Rat& area2() const { return area2_; }

  Location locate(const Point2& p) const;

  int wrap(int i) const {
    int n = size();
    i %= n;
    return i < 0 ? i + n : i;
  }

 private:
  explicit SimplePolygon(std::vector<Point2> v, Rat a2)
      : verts_(std::move(v)), area2_(std::move(a2)) {}
  std::vector<Point2> verts_;
  Rat area2_;
};

// Position on the boundary: parameter t in [0,1) along edge `edge`.  The
// canonical form keeps t < 1, so every vertex i is exactly {i, 0}.
struct BoundaryPoint {
  int edge = 0;
  Rat t = 0;

  bool operator==(const BoundaryPoint& o) const {
    return edge == o.edge && t == o.t;
  }
};

BoundaryPoint make_boundary_point(const SimplePolygon& p, int edge, Rat t);
Point2 boundary_position(const SimplePolygon& p, const BoundaryPoint& b);

// Linear order induced by the traversal direction from vertex 0.
bool boundary_less(const BoundaryPoint& a, const BoundaryPoint& b);

// b lies on the closed forward arc from a to c (a == c means the single point).
bool boundary_between(const BoundaryPoint& a, const BoundaryPoint& b,
                      const BoundaryPoint& c);

// Finds p on the boundary of `poly`, or nullopt.  Vertices map to {i, 0}.
std::optional<BoundaryPoint> locate_on_boundary(const SimplePolygon& poly,
                                                const Point2& p);

// Closed arc of the boundary in the traversal direction.
struct BoundaryArc {
  enum class Kind { Empty, Whole, Span };
  Kind kind = Kind::Empty;
  BoundaryPoint a, b;  // Span: from a forward to b (may wrap; a == b is a point)

  static BoundaryArc empty() { return {}; }
  static BoundaryArc whole() { return {Kind::Whole, {}, {}}; }
  static BoundaryArc span(BoundaryPoint from, BoundaryPoint to) {
    return {Kind::Span, std::move(from), std::move(to)};
  }

  bool contains(const BoundaryPoint& p) const;
  bool intersects(const BoundaryArc& o) const;
};

}  // namespace guarding
