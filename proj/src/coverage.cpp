#include "guarding/coverage.hpp"

#include <algorithm>

namespace guarding {

namespace {

using Poly = std::vector<Point2>;  // convex, positive area

// Clip a convex polygon to one side of the line through a, b.
// keep_left selects {p : cross(b-a, p-a) >= 0}.
Poly clip_half(const Poly& poly, const Point2& a, const Point2& b, bool keep_left) {
  Poly out;
  int m = static_cast<int>(poly.size());
  Point2 dir = b - a;
  auto side = [&](const Point2& p) {
    int s = sgn(cross(dir, p - a));
    return keep_left ? s : -s;
  };
  for (int i = 0; i < m; ++i) {
    const Point2& cur = poly[i];
    const Point2& nxt = poly[(i + 1) % m];
    int sc = side(cur), sn = side(nxt);
    if (sc >= 0) out.push_back(cur);
    if ((sc > 0 && sn < 0) || (sc < 0 && sn > 0)) {
      // Exact line-line intersection.
      Point2 e = nxt - cur;
      Rat t = cross(a - cur, dir) / cross(e, dir);
      out.push_back(cur + t * e);
    }
  }
  // Drop exact duplicates produced by touching vertices.
  Poly ded;
  for (const Point2& p : out)
    if (ded.empty() || !(ded.back() == p)) ded.push_back(p);
  while (ded.size() > 1 && ded.front() == ded.back()) ded.pop_back();
  return ded;
}

Rat poly_area2(const Poly& poly) {
  Rat s = 0;
  int m = static_cast<int>(poly.size());
  for (int i = 0; i < m; ++i) s += cross(poly[i], poly[(i + 1) % m]);
  return s;
}

void fan_triangles(const Poly& poly, std::vector<Triangle>& out) {
  for (std::size_t i = 1; i + 1 < poly.size(); ++i) {
    Triangle t{poly[0], poly[i], poly[i + 1]};
    if (sgn(triangle_area2(t)) > 0) out.push_back(t);
  }
}

// Does segment [a,b] meet the open interior of t?
bool segment_meets_interior(const Point2& a, const Point2& b, const Triangle& t) {
  // Clip the parameter interval [0,1] against the three half-planes.
  Rat lo = 0, hi = 1;
  Point2 d = b - a;
  for (int i = 0; i < 3; ++i) {
    const Point2& u = t[i];
    const Point2& v = t[(i + 1) % 3];
    Point2 e = v - u;
    // Inside means cross(e, p - u) >= 0 for counterclockwise t.
    Rat num = cross(e, a - u);
    Rat den = cross(e, d);
    int sd = sgn(den);
    if (sd == 0) {
      if (sgn(num) < 0) return false;  // parallel and outside
      continue;
    }
    Rat bound = -num / den;
    if (sd > 0) {
      if (bound > lo) lo = bound;
    } else {
      if (bound < hi) hi = bound;
    }
    if (lo > hi) return false;
  }
  Rat mid = (lo + hi) / 2;
  return point_in_triangle_strict(a + mid * d, t);
}

// Subtract one region from the triangle, appending uncovered pieces.
void subtract_region(const Triangle& tri, const VisibleBoundary& region,
                     std::vector<Triangle>& out) {
  const std::vector<Point2>& ring = region.region;
  int m = static_cast<int>(ring.size());
  for (int i = 0; i < m; ++i) {
    const Point2& a = ring[i];
    const Point2& b = ring[(i + 1) % m];
    if (a == b) continue;
    if (!segment_meets_interior(a, b, tri)) continue;
    // Split along the supporting line and recurse on both sides.
    Poly whole{tri[0], tri[1], tri[2]};
    if (sgn(poly_area2(whole)) < 0) std::reverse(whole.begin(), whole.end());
    for (bool keep_left : {true, false}) {
      Poly piece = clip_half(whole, a, b, keep_left);
      if (piece.size() < 3 || sgn(poly_area2(piece)) == 0) continue;
      std::vector<Triangle> sub;
      fan_triangles(piece, sub);
      for (const Triangle& s : sub) subtract_region(s, region, out);
    }
    return;
  }
  // No region edge passes through the interior: all-or-nothing.
  if (!region_contains(region, triangle_centroid(tri))) out.push_back(tri);
}

Triangle normalized(Triangle t) {
  std::sort(t.begin(), t.end(), lex_less);
  return t;
}

bool tri_lex_less(const Triangle& a, const Triangle& b) {
  Triangle x = normalized(a), y = normalized(b);
  for (int i = 0; i < 3; ++i) {
    if (lex_less(x[i], y[i])) return true;
    if (lex_less(y[i], x[i])) return false;
  }
  return false;
}

}  // namespace

CoverageResult uncovered_witness(const SimplePolygon& p,
                                 const std::vector<VisibleBoundary>& regions) {
  std::vector<Triangle> residual = triangulate(p);
  for (const VisibleBoundary& region : regions) {
    std::vector<Triangle> next;
    for (const Triangle& t : residual) subtract_region(t, region, next);
    residual = std::move(next);
    if (residual.empty()) break;
  }
  if (residual.empty()) return {true, std::nullopt};
  const Triangle* best = &residual[0];
  for (const Triangle& t : residual)
    if (tri_lex_less(t, *best)) best = &t;
  return {false, triangle_centroid(*best)};
}

CoverageResult uncovered_witness(const SimplePolygon& p,
                                 const std::vector<VisibleBoundary>& regions,
                                 const std::vector<Point2>& targets) {
  (void)p;
  for (const Point2& q : targets) {
    bool seen = false;
    for (const VisibleBoundary& r : regions)
      if (region_contains(r, q)) {
        seen = true;
        break;
      }
    if (!seen) return {false, q};
  }
  return {true, std::nullopt};
}

}  // namespace guarding
