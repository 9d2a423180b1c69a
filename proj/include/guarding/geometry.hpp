#pragma once

#include <compare>
#include <vector>

#include "guarding/rational.hpp"

namespace guarding {

struct Point2 {
  Rat x, y;

  bool operator==(const Point2& o) const { return x == o.x && y == o.y; }
  bool operator!=(const Point2& o) const { return !(*this == o); }
};

// Lexicographic (x, then y); the tie-break order used everywhere a
// deterministic choice among points is needed.
bool lex_less(const Point2& a, const Point2& b);

Point2 operator+(const Point2& a, const Point2& b);
Point2 operator-(const Point2& a, const Point2& b);
Point2 operator*(const Rat& s, const Point2& p);

Rat cross(const Point2& a, const Point2& b);
Rat dot(const Point2& a, const Point2& b);

enum class Turn { Right = -1, Straight = 0, Left = 1 };

// Sign of the signed area of triangle (a, b, c).
Turn orient(const Point2& a, const Point2& b, const Point2& c);
int orient_sign(const Point2& a, const Point2& b, const Point2& c);

// p on the closed segment [a, b] (degenerate a == b allowed).
bool on_segment(const Point2& p, const Point2& a, const Point2& b);

// Closed segments [a,b] and [c,d] share at least one point.
bool segments_intersect(const Point2& a, const Point2& b, const Point2& c,
                        const Point2& d);

// Proper crossing: one interior point of each, endpoints strictly separated.
bool segments_cross(const Point2& a, const Point2& b, const Point2& c,
                    const Point2& d);

bool collinear(const Point2& a, const Point2& b, const Point2& c);

// Cyclic comparator on nonzero direction vectors, counterclockwise starting
// from the +x axis.  Returns <0, 0, >0 like a three-way compare; 0 means the
// two directions are positive multiples of each other.
int angle_cmp(const Point2& u, const Point2& v);

// True if rotating from u to v counterclockwise sweeps an angle < pi.
bool ccw_gap_below_pi(const Point2& u, const Point2& v);

}  // namespace guarding
