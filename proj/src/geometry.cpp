#include "guarding/geometry.hpp"

namespace guarding {

bool lex_less(const Point2& a, const Point2& b) {
  int c = cmp(a.x, b.x);
  if (c != 0) return c < 0;
  return cmp(a.y, b.y) < 0;
}

Point2 operator+(const Point2& a, const Point2& b) { return {a.x + b.x, a.y + b.y}; }
Point2 operator-(const Point2& a, const Point2& b) { return {a.x - b.x, a.y - b.y}; }
Point2 operator*(const Rat& s, const Point2& p) { return {s * p.x, s * p.y}; }

Rat cross(const Point2& a, const Point2& b) { return a.x * b.y - a.y * b.x; }
Rat dot(const Point2& a, const Point2& b) { return a.x * b.x + a.y * b.y; }

int orient_sign(const Point2& a, const Point2& b, const Point2& c) {
  return sgn(cross(b - a, c - a));
}

Turn orient(const Point2& a, const Point2& b, const Point2& c) {
  return static_cast<Turn>(orient_sign(a, b, c));
}

bool on_segment(const Point2& p, const Point2& a, const Point2& b) {
  if (orient_sign(a, b, p) != 0) return false;
  return sgn(dot(p - a, p - b)) <= 0;
}

bool segments_cross(const Point2& a, const Point2& b, const Point2& c,
                    const Point2& d) {
  int d1 = orient_sign(c, d, a), d2 = orient_sign(c, d, b);
  int d3 = orient_sign(a, b, c), d4 = orient_sign(a, b, d);
  return d1 * d2 < 0 && d3 * d4 < 0;
}

bool segments_intersect(const Point2& a, const Point2& b, const Point2& c,
                        const Point2& d) {
  if (segments_cross(a, b, c, d)) return true;
  return on_segment(a, c, d) || on_segment(b, c, d) || on_segment(c, a, b) ||
         on_segment(d, a, b);
}

bool collinear(const Point2& a, const Point2& b, const Point2& c) {
  return orient_sign(a, b, c) == 0;
}

namespace {
// Half 0: angles in [0, pi) starting at +x; half 1: [pi, 2*pi).
int half_of(const Point2& u) {
  int sy = sgn(u.y);
  if (sy > 0) return 0;
  if (sy < 0) return 1;
  return sgn(u.x) > 0 ? 0 : 1;
}
}  // namespace

int angle_cmp(const Point2& u, const Point2& v) {
  int hu = half_of(u), hv = half_of(v);
  if (hu != hv) return hu < hv ? -1 : 1;
  return -sgn(cross(u, v));
}

bool ccw_gap_below_pi(const Point2& u, const Point2& v) {
  return sgn(cross(u, v)) > 0;
}

}  // namespace guarding
