#pragma once
// Shared polygon generators, deterministic sampling, and independent
// oracles.  The oracles re-derive visibility and containment from first
// principles so the library under test never checks itself.

#include <algorithm>
#include <random>
#include <vector>

#include "guarding/sites.hpp"
#include "guarding/visibility.hpp"

namespace fixtures {

using namespace guarding;

// mpq_class(n, d) does not reduce, and unreduced values break mpq equality,
// so every fraction built from variables must go through here.
inline Rat frac(long n, long d) {
  Rat r(n, d);
  r.canonicalize();
  return r;
}

// --- generators -----------------------------------------------------------

// Unit-arm L: reflex corner at (1,1).
inline SimplePolygon ell_small() {
  return SimplePolygon::make({{Rat(0), Rat(0)},
                              {Rat(2), Rat(0)},
                              {Rat(2), Rat(1)},
                              {Rat(1), Rat(1)},
                              {Rat(1), Rat(2)},
                              {Rat(0), Rat(2)}});
}

inline SimplePolygon ell_big() {
  return SimplePolygon::make({{Rat(0), Rat(0)},
                              {Rat(4), Rat(0)},
                              {Rat(4), Rat(2)},
                              {Rat(2), Rat(2)},
                              {Rat(2), Rat(4)},
                              {Rat(0), Rat(4)}});
}

// k prongs over a base strip: prong i spans x in [2i, 2i+1], y in [1, 3].
inline SimplePolygon comb(int k) {
  std::vector<Point2> v;
  v.push_back({Rat(0), Rat(0)});
  v.push_back({Rat(2 * k - 1), Rat(0)});
  for (int i = k - 1; i >= 0; --i) {
    v.push_back({Rat(2 * i + 1), Rat(3)});
    v.push_back({Rat(2 * i), Rat(3)});
    if (i > 0) {
      v.push_back({Rat(2 * i), Rat(1)});
      v.push_back({Rat(2 * i - 1), Rat(1)});
    }
  }
  return SimplePolygon::make(v);
}

// Rising steps from (0,0) to (k,k), closed along the top-left.
inline SimplePolygon staircase(int k) {
  std::vector<Point2> v;
  v.push_back({Rat(0), Rat(0)});
  for (int i = 1; i <= k; ++i) {
    v.push_back({Rat(i), Rat(i - 1)});
    v.push_back({Rat(i), Rat(i)});
  }
  v.push_back({Rat(0), Rat(k)});
  return SimplePolygon::make(v);
}

// Square with a deep V notch cut from the top edge.
inline SimplePolygon notched_square() {
  return SimplePolygon::make({{Rat(0), Rat(0)},
                              {Rat(6), Rat(0)},
                              {Rat(6), Rat(6)},
                              {Rat(4), Rat(6)},
                              {Rat(3), Rat(2)},
                              {Rat(2), Rat(6)},
                              {Rat(0), Rat(6)}});
}

// One-turn corridor; most point pairs cannot see each other.
inline SimplePolygon spiral() {
  return SimplePolygon::make({{Rat(0), Rat(0)},
                              {Rat(7), Rat(0)},
                              {Rat(7), Rat(7)},
                              {Rat(1), Rat(7)},
                              {Rat(1), Rat(2)},
                              {Rat(2), Rat(2)},
                              {Rat(2), Rat(6)},
                              {Rat(6), Rat(6)},
                              {Rat(6), Rat(1)},
                              {Rat(0), Rat(1)}});
}

// Convex hull of random lattice points; n varies with the draw.
inline SimplePolygon convex_poly(std::mt19937_64& rng, int draws, long extent) {
  for (;;) {
    std::vector<Point2> pts;
    for (int i = 0; i < draws; ++i)
      pts.push_back({Rat(static_cast<long>(rng() % (extent + 1))),
                     Rat(static_cast<long>(rng() % (extent + 1)))});
    std::sort(pts.begin(), pts.end(), lex_less);
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 3) continue;
    // Andrew monotone chain, strict turns only.
    auto build = [&](bool upper) {
      std::vector<Point2> h;
      for (std::size_t i = 0; i < pts.size(); ++i) {
        const Point2& q = upper ? pts[pts.size() - 1 - i] : pts[i];
        while (h.size() >= 2 &&
               orient_sign(h[h.size() - 2], h.back(), q) <= 0)
          h.pop_back();
        h.push_back(q);
      }
      h.pop_back();
      return h;
    };
    std::vector<Point2> hull = build(false), up = build(true);
    hull.insert(hull.end(), up.begin(), up.end());
    if (hull.size() < 3) continue;
    return SimplePolygon::make(hull);
  }
}

// --- deterministic sampling ----------------------------------------------

// Uniform lattice point of denominator den inside the closed bounding box.
inline Point2 random_box_point(const SimplePolygon& p, std::mt19937_64& rng,
                               long den) {
  Rat xmin = p.vertex(0).x, xmax = xmin, ymin = p.vertex(0).y, ymax = ymin;
  for (int i = 1; i < p.size(); ++i) {
    xmin = std::min(xmin, p.vertex(i).x);
    xmax = std::max(xmax, p.vertex(i).x);
    ymin = std::min(ymin, p.vertex(i).y);
    ymax = std::max(ymax, p.vertex(i).y);
  }
  // Explicit return type: gmpxx expressions must collapse to a value before
  // the temporaries inside them die.
  auto draw = [&](const Rat& lo, const Rat& hi) -> Rat {
    Rat width = hi - lo;
    Int steps = width.get_num() * den / width.get_den();
    unsigned long m = steps.get_ui() + 1;
    return lo + frac(static_cast<long>(rng() % m), den);
  };
  return {draw(xmin, xmax), draw(ymin, ymax)};
}

inline Point2 random_interior_point(const SimplePolygon& p,
                                    std::mt19937_64& rng, long den) {
  for (;;) {
    Point2 q = random_box_point(p, rng, den);
    if (p.locate(q) == Location::Interior) return q;
  }
}

inline Point2 random_in_point(const SimplePolygon& p, std::mt19937_64& rng,
                              long den) {
  for (;;) {
    Point2 q = random_box_point(p, rng, den);
    if (p.locate(q) != Location::Exterior) return q;
  }
}

// --- independent oracles --------------------------------------------------

// Even-odd crossing count with an eastward ray; boundary detected per edge.
// 1 = interior, 0 = boundary, -1 = exterior.
inline int oracle_locate(const SimplePolygon& p, const Point2& q) {
  int n = p.size();
  for (int i = 0; i < n; ++i) {
    Point2 a = p.vertex(i), b = p.vertex((i + 1) % n);
    Rat cr = cross(b - a, q - a);
    if (sgn(cr) == 0 && sgn(dot(q - a, q - b)) <= 0) return 0;
  }
  int crossings = 0;
  for (int i = 0; i < n; ++i) {
    Point2 a = p.vertex(i), b = p.vertex((i + 1) % n);
    bool up = a.y <= q.y && q.y < b.y;
    bool down = b.y <= q.y && q.y < a.y;
    if (!up && !down) continue;
    // x coordinate where the edge meets the horizontal through q.
    Rat xi = a.x + (b.x - a.x) * (q.y - a.y) / (b.y - a.y);
    if (xi > q.x) ++crossings;
  }
  return crossings % 2 == 1 ? 1 : -1;
}

// Closed-segment visibility from scratch: no transversal edge crossing, and
// every sub-segment midpoint between contact parameters stays in the closed
// polygon.
inline bool oracle_sees(const SimplePolygon& p, const Point2& g,
                        const Point2& q) {
  if (oracle_locate(p, g) < 0 || oracle_locate(p, q) < 0) return false;
  if (g == q) return true;
  Point2 d = q - g;
  std::vector<Rat> ts{Rat(0), Rat(1)};
  int n = p.size();
  for (int i = 0; i < n; ++i) {
    Point2 a = p.vertex(i), b = p.vertex((i + 1) % n);
    Point2 e = b - a;
    Rat den = cross(d, e);
    if (sgn(den) != 0) {
      Rat t = cross(a - g, e) / den;
      Rat s = cross(a - g, d) / den;
      if (sgn(t) < 0 || t > 1 || sgn(s) < 0 || s > 1) continue;
      bool t_interior = sgn(t) > 0 && t < 1;
      bool s_interior = sgn(s) > 0 && s < 1;
      if (t_interior && s_interior) return false;  // transversal crossing
      ts.push_back(t);
    } else if (sgn(cross(a - g, d)) == 0) {
      Rat dd = dot(d, d);
      Rat t0 = dot(a - g, d) / dd, t1 = dot(b - g, d) / dd;
      if (t0 > t1) std::swap(t0, t1);
      if (t1 < 0 || t0 > 1) continue;
      ts.push_back(std::max(Rat(0), t0));
      ts.push_back(std::min(Rat(1), t1));
    }
  }
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
    Rat m = (ts[i] + ts[i + 1]) / 2;
    if (oracle_locate(p, {g.x + m * d.x, g.y + m * d.y}) < 0) return false;
  }
  return true;
}

}  // namespace fixtures
