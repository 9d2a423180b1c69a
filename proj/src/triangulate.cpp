#include "guarding/triangulate.hpp"

#include <stdexcept>

namespace guarding {

Rat triangle_area2(const Triangle& t) {
  Rat a = cross(t[1] - t[0], t[2] - t[0]);
  return sgn(a) < 0 ? Rat(-a) : a;
}

Point2 triangle_centroid(const Triangle& t) {
  return {(t[0].x + t[1].x + t[2].x) / 3, (t[0].y + t[1].y + t[2].y) / 3};
}

bool point_in_triangle_strict(const Point2& p, const Triangle& t) {
  int s0 = orient_sign(t[0], t[1], p);
  int s1 = orient_sign(t[1], t[2], p);
  int s2 = orient_sign(t[2], t[0], p);
  if (s0 == 0 || s1 == 0 || s2 == 0) return false;
  return s0 == s1 && s1 == s2;
}

bool point_in_triangle_closed(const Point2& p, const Triangle& t) {
  int s0 = orient_sign(t[0], t[1], p);
  int s1 = orient_sign(t[1], t[2], p);
  int s2 = orient_sign(t[2], t[0], p);
  return (s0 >= 0 && s1 >= 0 && s2 >= 0) || (s0 <= 0 && s1 <= 0 && s2 <= 0);
}

std::vector<Triangle> triangulate(const SimplePolygon& poly) {
  // Work on the vertex ring with straight vertices dropped; they carry no
  // area information.
  std::vector<Point2> ring;
  int n = poly.size();
  for (int i = 0; i < n; ++i) {
    const Point2& a = poly.vertex(i - 1);
    const Point2& b = poly.vertex(i);
    const Point2& c = poly.vertex(i + 1);
    if (orient_sign(a, b, c) != 0) ring.push_back(b);
  }
  std::vector<Triangle> out;
  while (ring.size() > 3) {
    int m = static_cast<int>(ring.size());
    int ear = -1;
    for (int i = 0; i < m; ++i) {
      const Point2& a = ring[(i + m - 1) % m];
      const Point2& b = ring[i];
      const Point2& c = ring[(i + 1) % m];
      if (orient_sign(a, b, c) <= 0) continue;  // reflex or straight
      Triangle t{a, b, c};
      bool blocked = false;
      for (int j = 0; j < m && !blocked; ++j) {
        if (j == i || j == (i + m - 1) % m || j == (i + 1) % m) continue;
        const Point2& q = ring[j];
        // A vertex on the ear's open diagonal blocks it too.
        if (point_in_triangle_strict(q, t) || on_segment(q, a, c))
          blocked = true;
      }
      if (!blocked) {
        ear = i;
        break;
      }
    }
    if (ear < 0) throw std::logic_error("triangulate: no ear found");
    int m2 = static_cast<int>(ring.size());
    out.push_back({ring[(ear + m2 - 1) % m2], ring[ear], ring[(ear + 1) % m2]});
    ring.erase(ring.begin() + ear);
  }
  if (ring.size() == 3) out.push_back({ring[0], ring[1], ring[2]});
  return out;
}

}  // namespace guarding
