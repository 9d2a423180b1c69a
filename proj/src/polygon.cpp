#include "guarding/polygon.hpp"

#include <algorithm>

namespace guarding {

namespace {

Rat shoelace2(const std::vector<Point2>& v) {
  Rat s = 0;
  int n = static_cast<int>(v.size());
  for (int i = 0; i < n; ++i) s += cross(v[i], v[(i + 1) % n]);
  return s;
}

}  // namespace

SimplePolygon SimplePolygon::make(std::vector<Point2> verts) {
  int n = static_cast<int>(verts.size());
  if (n < 3)
    throw PolygonError(PolygonDefect::TooFewVertices,
                       "polygon needs at least 3 vertices");
  for (int i = 0; i < n; ++i)
    if (verts[i] == verts[(i + 1) % n])
      throw PolygonError(PolygonDefect::DuplicateConsecutiveVertex,
                         "duplicate consecutive vertex at index " +
                             std::to_string(i),
                         i, (i + 1) % n);
  // A straight vertex is fine, but the boundary must not reverse direction.
  for (int i = 0; i < n; ++i) {
    const Point2& a = verts[(i + n - 1) % n];
    const Point2& b = verts[i];
    const Point2& c = verts[(i + 1) % n];
    if (orient_sign(a, b, c) == 0 && sgn(dot(b - a, c - b)) < 0)
      throw PolygonError(PolygonDefect::Spike,
                         "boundary folds back at vertex " + std::to_string(i),
                         (i + n - 1) % n, i);
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      bool adjacent = j == i + 1 || (i == 0 && j == n - 1);
      if (adjacent) continue;
      const Point2 &a = verts[i], &b = verts[(i + 1) % n];
      const Point2 &c = verts[j], &d = verts[(j + 1) % n];
      if (segments_intersect(a, b, c, d))
        throw PolygonError(PolygonDefect::SelfIntersection,
                           "edges " + std::to_string(i) + " and " +
                               std::to_string(j) + " intersect",
                           i, j);
    }
  }
  Rat a2 = shoelace2(verts);
  if (sgn(a2) == 0)
    throw PolygonError(PolygonDefect::ZeroArea, "polygon encloses no area");
  if (sgn(a2) < 0) {
    std::reverse(verts.begin(), verts.end());
    a2 = -a2;
  }
  return SimplePolygon(std::move(verts), std::move(a2));
}

Location SimplePolygon::locate(const Point2& p) const {
  int n = size();
  for (int i = 0; i < n; ++i) {
    auto [a, b] = edge(i);
    if (on_segment(p, a, b)) return Location::Boundary;
  }
  // Winding number; boundary already excluded, so crossings are clean.
  long wind = 0;
  for (int i = 0; i < n; ++i) {
    auto [a, b] = edge(i);
    if (cmp(a.y, p.y) <= 0) {
      if (cmp(b.y, p.y) > 0 && orient_sign(a, b, p) > 0) ++wind;
    } else {
      if (cmp(b.y, p.y) <= 0 && orient_sign(a, b, p) < 0) --wind;
    }
  }
  return wind != 0 ? Location::Interior : Location::Exterior;
}

BoundaryPoint make_boundary_point(const SimplePolygon& p, int edge, Rat t) {
  t.canonicalize();  // BoundaryPoint equality requires reduced parameters
  if (sgn(t) < 0 || t > 1) throw std::invalid_argument("edge parameter out of range");
  if (t == 1) return {p.wrap(edge + 1), Rat(0)};
  return {p.wrap(edge), std::move(t)};
}

Point2 boundary_position(const SimplePolygon& p, const BoundaryPoint& b) {
  auto [a, c] = p.edge(b.edge);
  return a + b.t * (c - a);
}

bool boundary_less(const BoundaryPoint& a, const BoundaryPoint& b) {
  if (a.edge != b.edge) return a.edge < b.edge;
  return a.t < b.t;
}

bool boundary_between(const BoundaryPoint& a, const BoundaryPoint& b,
                      const BoundaryPoint& c) {
  if (a == c) return b == a;
  if (boundary_less(a, c)) return !boundary_less(b, a) && !boundary_less(c, b);
  return !boundary_less(b, a) || !boundary_less(c, b);
}

std::optional<BoundaryPoint> locate_on_boundary(const SimplePolygon& poly,
                                                const Point2& p) {
  int n = poly.size();
  for (int i = 0; i < n; ++i)
    if (p == poly.vertex(i)) return BoundaryPoint{i, Rat(0)};
  for (int i = 0; i < n; ++i) {
    auto [a, b] = poly.edge(i);
    if (!on_segment(p, a, b)) continue;
    // Interior of edge i: recover t from the dominant coordinate.
    Point2 d = b - a;
    Rat t = sgn(d.x) != 0 ? (p.x - a.x) / d.x : (p.y - a.y) / d.y;
    return BoundaryPoint{i, std::move(t)};
  }
  return std::nullopt;
}

bool BoundaryArc::contains(const BoundaryPoint& p) const {
  switch (kind) {
    case Kind::Empty: return false;
    case Kind::Whole: return true;
    case Kind::Span: return boundary_between(a, p, b);
  }
  return false;
}

bool BoundaryArc::intersects(const BoundaryArc& o) const {
  if (kind == Kind::Empty || o.kind == Kind::Empty) return false;
  if (kind == Kind::Whole || o.kind == Kind::Whole) return true;
  return boundary_between(a, o.a, b) || boundary_between(a, o.b, b) ||
         boundary_between(o.a, a, o.b);
}

}  // namespace guarding
