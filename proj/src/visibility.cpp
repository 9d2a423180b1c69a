#include "guarding/visibility.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace guarding {

// ---------------------------------------------------------------------------
// Local cone test
// ---------------------------------------------------------------------------

namespace {

ConeStep vertex_cone(const SimplePolygon& p, int i, const Point2& d) {
  const Point2& u = p.vertex(i - 1);
  const Point2& v = p.vertex(i);
  const Point2& w = p.vertex(i + 1);
  Point2 a = v - u;  // incoming edge direction
  Point2 b = w - v;  // outgoing edge direction
  Rat cb = cross(b, d);
  if (sgn(cb) == 0 && sgn(dot(b, d)) > 0) return ConeStep::Along;
  Rat ca = cross(a, d);
  if (sgn(ca) == 0 && sgn(dot(a, d)) < 0) return ConeStep::Along;
  int turn = orient_sign(u, v, w);
  if (turn > 0)  // convex corner: inside means left of both edges
    return (sgn(ca) > 0 && sgn(cb) > 0) ? ConeStep::Enters : ConeStep::Exits;
  if (turn < 0)  // reflex corner: inside means left of either edge
    return (sgn(ca) > 0 || sgn(cb) > 0) ? ConeStep::Enters : ConeStep::Exits;
  return sgn(cb) > 0 ? ConeStep::Enters : ConeStep::Exits;  // straight vertex
}

}  // namespace

ConeStep boundary_cone(const SimplePolygon& p, const BoundaryPoint& b,
                       const Point2& d) {
  if (sgn(b.t) == 0) return vertex_cone(p, b.edge, d);
  auto [A, B] = p.edge(b.edge);
  Rat c = cross(B - A, d);
  if (sgn(c) > 0) return ConeStep::Enters;
  if (sgn(c) < 0) return ConeStep::Exits;
  return ConeStep::Along;
}

// ---------------------------------------------------------------------------
// Ray/segment contact enumeration
// ---------------------------------------------------------------------------

namespace {

// One merged stretch of boundary met by the ray: a point (lo == hi) or a
// maximal collinear run the ray travels along.
struct Event {
  Rat lo, hi;
  BoundaryPoint blo, bhi;
  bool run = false;
  int run_dir = 0;  // +1 if the run's perimeter order matches ray order
};

struct RawContact {
  Rat lo, hi;
  BoundaryPoint blo, bhi;
  bool run;
  int run_dir;
};

// All contacts of the ray x + t*d (t >= 0) with the boundary, merged into
// events sorted by t.  Touching contacts coalesce, so collinear chains come
// out as single runs and vertex contacts appear once.
std::vector<Event> ray_events(const SimplePolygon& p, const Point2& x,
                              const Point2& d) {
  int n = p.size();
  std::vector<RawContact> raw;
  raw.reserve(8);
  Rat dd = dot(d, d);
  for (int i = 0; i < n; ++i) {
    auto [A, B] = p.edge(i);
    Point2 e = B - A;
    Point2 ax = A - x;
    Rat den = cross(d, e);
    if (sgn(den) != 0) {
      Rat t = cross(ax, e) / den;
      if (sgn(t) < 0) continue;
      Rat s = cross(ax, d) / den;
      int ss = sgn(s);
      if (ss < 0 || s > 1) continue;
      BoundaryPoint bp = make_boundary_point(p, i, s);
      raw.push_back({t, t, bp, bp, false, 0});
    } else if (sgn(cross(ax, d)) == 0) {
      // Edge collinear with the ray line.
      Rat tA = dot(ax, d) / dd;
      Rat tB = dot(B - x, d) / dd;
      int dir = tA < tB ? 1 : -1;
      Rat lo = tA, hi = tB;
      BoundaryPoint blo = make_boundary_point(p, i, Rat(0));
      BoundaryPoint bhi = make_boundary_point(p, i, Rat(1));
      if (dir < 0) {
        std::swap(lo, hi);
        std::swap(blo, bhi);
      }
      if (sgn(hi) < 0) continue;
      if (sgn(lo) < 0) {
        // Clip the run at the origin; x sits on this edge.
        Rat s = sgn(e.x) != 0 ? (x.x - A.x) / e.x : (x.y - A.y) / e.y;
        lo = 0;
        blo = make_boundary_point(p, i, s);
      }
      raw.push_back({lo, hi, blo, bhi, true, dir});
    }
  }
  std::sort(raw.begin(), raw.end(), [](const RawContact& a, const RawContact& b) {
    int c = cmp(a.lo, b.lo);
    if (c != 0) return c < 0;
    return cmp(a.hi, b.hi) < 0;
  });
  std::vector<Event> events;
  for (const RawContact& c : raw) {
    if (!events.empty() && c.lo <= events.back().hi) {
      Event& ev = events.back();
      if (c.hi > ev.hi) {
        ev.hi = c.hi;
        ev.bhi = c.bhi;
      }
      if (c.run) {
        assert(!ev.run || ev.run_dir == c.run_dir);
        ev.run = true;
        ev.run_dir = c.run_dir;
      }
    } else {
      events.push_back({c.lo, c.hi, c.blo, c.bhi, c.run, c.run_dir});
    }
  }
  return events;
}

BoundaryArc event_arc(const Event& ev) {
  if (!ev.run) return BoundaryArc::span(ev.blo, ev.blo);
  return ev.run_dir > 0 ? BoundaryArc::span(ev.blo, ev.bhi)
                        : BoundaryArc::span(ev.bhi, ev.blo);
}

}  // namespace

RayWalk ray_walk(const SimplePolygon& p, const Point2& origin, const Point2& d) {
  if (sgn(d.x) == 0 && sgn(d.y) == 0)
    throw std::invalid_argument("ray_walk: zero direction");
  RayWalk out;
  out.t_star = 0;
  std::vector<Event> events = ray_events(p, origin, d);
  for (const Event& ev : events) {
    out.pieces.push_back({ev.lo, ev.hi, ev.blo, ev.bhi, event_arc(ev)});
    out.t_star = ev.hi;
    ConeStep step = boundary_cone(p, ev.bhi, d);
    if (step == ConeStep::Exits) return out;
    if (step == ConeStep::Along)
      throw std::logic_error("ray_walk: unmerged collinear run");
  }
  // A ray from inside a bounded polygon must leave through the boundary.
  throw std::logic_error("ray_walk: ray never left the polygon");
}

bool sees(const SimplePolygon& p, const Point2& g, const Point2& q) {
  if (p.locate(g) == Location::Exterior)
    throw PointOutside("guard point outside polygon");
  if (p.locate(q) == Location::Exterior)
    throw PointOutside("query point outside polygon");
  if (g == q) return true;
  Point2 d = q - g;
  std::vector<Event> events = ray_events(p, g, d);
  for (const Event& ev : events) {
    if (ev.lo > 1) break;
    if (ev.hi >= 1) return true;  // the contact carries us to q
    ConeStep step = boundary_cone(p, ev.bhi, d);
    if (step == ConeStep::Exits) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Angular sweep
// ---------------------------------------------------------------------------

namespace {

// END sentinel key sorts after every boundary point; geometrically it is
// vertex 0 again.
using Key = std::pair<int, Rat>;

Key key_of(const BoundaryPoint& b) { return {b.edge, b.t}; }

struct LinIv {
  Key lo, hi;
  bool sector;  // contributed by a positive-width sector arc
};

void arc_to_linear(const SimplePolygon& p, const BoundaryArc& arc, bool sector,
                   std::vector<LinIv>& out) {
  Key begin{0, Rat(0)}, end{p.size(), Rat(0)};
  switch (arc.kind) {
    case BoundaryArc::Kind::Empty:
      return;
    case BoundaryArc::Kind::Whole:
      out.push_back({begin, end, sector});
      return;
    case BoundaryArc::Kind::Span: {
      Key a = key_of(arc.a), b = key_of(arc.b);
      if (a <= b) {
        out.push_back({a, b, sector});
      } else {
        out.push_back({a, end, sector});
        out.push_back({begin, b, sector});
      }
      return;
    }
  }
}

BoundaryPoint key_to_bp(const SimplePolygon& p, const Key& k) {
  if (k.first >= p.size()) return BoundaryPoint{0, Rat(0)};
  return BoundaryPoint{k.first, k.second};
}

struct Sector {
  bool present = false;
  int edge = -1;
  Rat s1, s2;    // edge params at the two bounding rays (s1 < s2)
  Rat t1, t2;    // depth along the first / second bounding ray
  Point2 w1, w2; // arc endpoints
};

// Minimal positive-depth point contact along d; between consecutive event
// rays this is always a clean transversal hit on one edge.
bool first_hit(const SimplePolygon& p, const Point2& x, const Point2& d,
               int& edge, Rat& t_out, Rat& s_out) {
  bool found = false;
  Rat best_t, best_s;
  int best_e = -1;
  int n = p.size();
  for (int i = 0; i < n; ++i) {
    auto [A, B] = p.edge(i);
    Point2 e = B - A;
    Point2 ax = A - x;
    Rat den = cross(d, e);
    if (sgn(den) == 0) continue;
    Rat t = cross(ax, e) / den;
    if (sgn(t) <= 0) continue;
    Rat s = cross(ax, d) / den;
    if (sgn(s) < 0 || s > 1) continue;
    if (!found || t < best_t) {
      found = true;
      best_t = t;
      best_s = s;
      best_e = i;
    }
  }
  if (!found) return false;
  edge = best_e;
  t_out = best_t;
  s_out = best_s;
  return true;
}

// Where the bounding ray x + t*dir meets the line of edge m; falls back to
// the edge endpoint sitting on the ray when the two are parallel.
void ray_edge_line(const SimplePolygon& p, const Point2& x, const Point2& dir,
                   int m, Rat& s, Rat& t, Point2& w) {
  auto [A, B] = p.edge(m);
  Point2 e = B - A;
  Rat den = cross(dir, e);
  if (sgn(den) != 0) {
    t = cross(A - x, e) / den;
    s = cross(A - x, dir) / den;
    w = A + s * e;
    return;
  }
  Rat dd = dot(dir, dir);
  for (int k = 0; k < 2; ++k) {
    const Point2& v = k == 0 ? A : B;
    if (sgn(cross(dir, v - x)) == 0 && sgn(dot(dir, v - x)) > 0) {
      s = Rat(k);
      t = dot(v - x, dir) / dd;
      w = v;
      return;
    }
  }
  throw std::logic_error("sector edge collinear through the source");
}

}  // namespace

VisibleBoundary visible_boundary(const SimplePolygon& p, const Point2& x) {
  if (p.locate(x) == Location::Exterior)
    throw PointOutside("sweep source outside polygon");
  std::optional<BoundaryPoint> bx = locate_on_boundary(p, x);

  // Critical directions: one representative per distinct vertex direction.
  int n = p.size();
  std::vector<Point2> dirs;
  dirs.reserve(n);
  for (int i = 0; i < n; ++i) {
    Point2 d = p.vertex(i) - x;
    if (sgn(d.x) == 0 && sgn(d.y) == 0) continue;
    dirs.push_back(d);
  }
  std::sort(dirs.begin(), dirs.end(),
            [](const Point2& a, const Point2& b) { return angle_cmp(a, b) < 0; });
  dirs.erase(std::unique(dirs.begin(), dirs.end(),
                         [](const Point2& a, const Point2& b) {
                           return angle_cmp(a, b) == 0;
                         }),
             dirs.end());
  int K = static_cast<int>(dirs.size());
  if (K < 2) throw std::logic_error("degenerate direction fan");

  std::vector<RayWalk> walks;
  walks.reserve(K);
  for (int i = 0; i < K; ++i) walks.push_back(ray_walk(p, x, dirs[i]));

  // Sector k sits between dirs[k] and dirs[k+1].
  std::vector<Sector> sectors(K);
  for (int k = 0; k < K; ++k) {
    const Point2& d1 = dirs[k];
    const Point2& d2 = dirs[(k + 1) % K];
    if (!ccw_gap_below_pi(d1, d2)) continue;
    Point2 probe = d1 + d2;
    if (bx) {
      ConeStep step = boundary_cone(p, *bx, probe);
      if (step == ConeStep::Exits) continue;
      assert(step == ConeStep::Enters);
    }
    Sector sec;
    Rat t_probe, s_probe;
    if (!first_hit(p, x, probe, sec.edge, t_probe, s_probe))
      throw std::logic_error("sector probe found no boundary");
    ray_edge_line(p, x, d1, sec.edge, sec.s1, sec.t1, sec.w1);
    ray_edge_line(p, x, d2, sec.edge, sec.s2, sec.t2, sec.w2);
    assert(sec.s1 < sec.s2);
    sec.present = true;
    sectors[k] = std::move(sec);
  }

  VisibleBoundary vb;
  vb.source = x;

  // Stitch region, needle pieces and tangencies ray by ray, in angular order.
  std::vector<std::pair<BoundaryArc, bool>> pieces;  // (arc, from_sector)
  for (int k = 0; k < K; ++k)
    if (sectors[k].present) {
      const Sector& s = sectors[k];
      pieces.push_back({BoundaryArc::span(make_boundary_point(p, s.edge, s.s1),
                                          make_boundary_point(p, s.edge, s.s2)),
                        true});
    }

  auto push_region = [&vb](const Point2& pt) {
    if (vb.region.empty() || !(vb.region.back() == pt)) vb.region.push_back(pt);
  };
  auto add_tangent = [&vb](const BoundaryPoint& at, bool left) {
    vb.tangents.push_back({at, left});
  };

  for (int i = 0; i < K; ++i) {
    const Sector* left = sectors[(i + K - 1) % K].present
                             ? &sectors[(i + K - 1) % K]
                             : nullptr;   // arc ends on this ray at depth t2
    const Sector* right = sectors[i].present ? &sectors[i] : nullptr;
    const RayWalk& walk = walks[i];
    const Point2& d = dirs[i];

    const Rat* tL = left ? &left->t2 : nullptr;
    const Rat* tR = right ? &right->t1 : nullptr;

    // Region vertices contributed at this ray, in counterclockwise order.
    Point2 far = x + walk.t_star * d;
    bool has_far = sgn(walk.t_star) > 0 &&
                   (!tL || walk.t_star > *tL) && (!tR || walk.t_star > *tR);
    if (left)
      push_region(left->w2);
    else
      push_region(x);
    if (has_far) push_region(far);
    if (right)
      push_region(right->w1);
    else
      push_region(x);

    // Window tangencies: the boundary dives behind the nearer arc end.
    if (tL && walk.t_star > *tL)
      add_tangent(make_boundary_point(p, left->edge, left->s2), /*left=*/true);
    if (tR && walk.t_star > *tR)
      add_tangent(make_boundary_point(p, right->edge, right->s1), /*left=*/false);

    // Pieces met along the ray itself: window endpoints are already covered
    // by sector arcs; everything else is a graze, a collinear run, or the
    // terminal hit.
    for (std::size_t j = 0; j < walk.pieces.size(); ++j) {
      const RayPiece& pc = walk.pieces[j];
      bool terminal = pc.t1 == walk.t_star;
      pieces.push_back({pc.arc, false});
      if (pc.t0 == pc.t1) {
        if ((tL && pc.t0 == *tL) || (tR && pc.t0 == *tR)) continue;
        if (terminal) continue;  // transversal far hit, not a tangency
        if (bx && pc.b0 == *bx) continue;
        add_tangent(pc.b0, true);
        add_tangent(pc.b0, false);
      } else {
        // Collinear run: near end hides boundary behind it unless it starts
        // at the source; far end likewise unless the walk stops there.
        bool near_is_start = pc.arc.a == (pc.b0);  // perimeter start at t0
        if (!(bx && pc.b0 == *bx))
          add_tangent(pc.b0, !near_is_start);
        if (!terminal) add_tangent(pc.b1, near_is_start);
      }
    }
  }

  // Close the region ring and strip the wrap duplicate.
  while (vb.region.size() > 1 && vb.region.front() == vb.region.back())
    vb.region.pop_back();
  if (vb.region.size() < 3) throw std::logic_error("degenerate visibility region");

  // Merge all visible pieces into maximal disjoint arcs in perimeter order.
  std::vector<LinIv> ivs;
  for (auto& [arc, from_sector] : pieces) arc_to_linear(p, arc, from_sector, ivs);
  std::sort(ivs.begin(), ivs.end(), [](const LinIv& a, const LinIv& b) {
    if (a.lo != b.lo) return a.lo < b.lo;
    return a.hi < b.hi;
  });
  std::vector<LinIv> merged;
  for (const LinIv& iv : ivs) {
    if (!merged.empty() && iv.lo <= merged.back().hi) {
      if (iv.hi > merged.back().hi) merged.back().hi = iv.hi;
      merged.back().sector |= iv.sector;
    } else {
      merged.push_back(iv);
    }
  }
  Key begin{0, Rat(0)}, end{n, Rat(0)};
  if (merged.size() == 1 && merged[0].lo == begin && merged[0].hi == end) {
    vb.items.push_back({BoundaryArc::whole(), false, {Rat(0), Rat(0)}, {Rat(0), Rat(0)}});
  } else {
    // Glue a wrap-around pair into one item spanning vertex 0.
    bool wrap = merged.size() >= 2 && merged.front().lo == begin &&
                merged.back().hi == end;
    std::size_t lo_idx = 0, hi_idx = merged.size();
    if (wrap) {
      LinIv glued{merged.back().lo, merged.front().hi,
                  merged.back().sector || merged.front().sector};
      merged.front() = glued;  // temporarily holds the glued piece
      lo_idx = 1;
      hi_idx = merged.size() - 1;
      LinIv g = merged.front();
      for (std::size_t j = lo_idx; j < hi_idx; ++j) {
        const LinIv& iv = merged[j];
        BoundaryPoint a = key_to_bp(p, iv.lo), b = key_to_bp(p, iv.hi);
        Point2 pa = boundary_position(p, a), pb = boundary_position(p, b);
        vb.items.push_back({BoundaryArc::span(a, b), !iv.sector, pa - x, pb - x});
      }
      BoundaryPoint a = key_to_bp(p, g.lo), b = key_to_bp(p, g.hi);
      Point2 pa = boundary_position(p, a), pb = boundary_position(p, b);
      vb.items.push_back({BoundaryArc::span(a, b), !g.sector, pa - x, pb - x});
    } else {
      for (const LinIv& iv : merged) {
        BoundaryPoint a = key_to_bp(p, iv.lo), b = key_to_bp(p, iv.hi);
        Point2 pa = boundary_position(p, a), pb = boundary_position(p, b);
        vb.items.push_back({BoundaryArc::span(a, b), !iv.sector, pa - x, pb - x});
      }
    }
  }

  // Deduplicate tangency records.
  std::sort(vb.tangents.begin(), vb.tangents.end(),
            [](const Tangency& a, const Tangency& b) {
              if (a.at.edge != b.at.edge) return a.at.edge < b.at.edge;
              if (a.at.t != b.at.t) return a.at.t < b.at.t;
              return a.left < b.left;
            });
  vb.tangents.erase(std::unique(vb.tangents.begin(), vb.tangents.end(),
                                [](const Tangency& a, const Tangency& b) {
                                  return a.at == b.at && a.left == b.left;
                                }),
                    vb.tangents.end());
  return vb;
}

Rat region_area2(const VisibleBoundary& vb) {
  Rat s = 0;
  int m = static_cast<int>(vb.region.size());
  for (int i = 0; i < m; ++i) s += cross(vb.region[i], vb.region[(i + 1) % m]);
  return sgn(s) < 0 ? Rat(-s) : s;
}

bool region_contains(const VisibleBoundary& vb, const Point2& q) {
  int m = static_cast<int>(vb.region.size());
  for (int i = 0; i < m; ++i) {
    const Point2& a = vb.region[i];
    const Point2& b = vb.region[(i + 1) % m];
    if (a == b ? (q == a) : on_segment(q, a, b)) return true;
  }
  long wind = 0;
  for (int i = 0; i < m; ++i) {
    const Point2& a = vb.region[i];
    const Point2& b = vb.region[(i + 1) % m];
    if (cmp(a.y, q.y) <= 0) {
      if (cmp(b.y, q.y) > 0 && orient_sign(a, b, q) > 0) ++wind;
    } else {
      if (cmp(b.y, q.y) <= 0 && orient_sign(a, b, q) < 0) --wind;
    }
  }
  return wind != 0;
}

bool weakly_sees_arc(const VisibleBoundary& vb, const BoundaryArc& target) {
  for (const VisItem& it : vb.items)
    if (it.arc.intersects(target)) return true;
  return false;
}

// ---------------------------------------------------------------------------
// Per-arc classification
// ---------------------------------------------------------------------------

namespace {

// The unique tile containing points just after (forward) or just before
// (backward) `at`, given closed arcs tiling the boundary.
int tile_at(const std::vector<BoundaryArc>& arcs, const BoundaryPoint& at,
            bool forward) {
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    const BoundaryArc& f = arcs[i];
    if (f.kind == BoundaryArc::Kind::Whole) return static_cast<int>(i);
    if (f.kind != BoundaryArc::Kind::Span) continue;
    if (forward) {
      if (f.a == at) return static_cast<int>(i);
      if (f.contains(at) && !(f.b == at)) return static_cast<int>(i);
    } else {
      if (f.b == at) return static_cast<int>(i);
      if (f.contains(at) && !(f.a == at)) return static_cast<int>(i);
    }
  }
  return -1;
}

}  // namespace

std::vector<ArcLabel> classify_arcs(const SimplePolygon& p,
                                    const VisibleBoundary& vb,
                                    const std::vector<BoundaryArc>& arcs) {
  std::vector<ArcLabel> labels(arcs.size());
  std::optional<BoundaryPoint> bx = locate_on_boundary(p, vb.source);
  Key end{p.size(), Rat(0)};

  for (std::size_t fi = 0; fi < arcs.size(); ++fi) {
    const BoundaryArc& f = arcs[fi];
    ArcLabel& lab = labels[fi];
    if (f.kind == BoundaryArc::Kind::Empty) continue;

    std::vector<LinIv> fiv;
    arc_to_linear(p, f, false, fiv);

    // Visible pieces clipped to this arc.
    std::vector<std::pair<Key, Key>> pieces;
    for (const VisItem& it : vb.items) {
      std::vector<LinIv> iiv;
      arc_to_linear(p, it.arc, false, iiv);
      for (const LinIv& a : iiv)
        for (const LinIv& b : fiv) {
          Key lo = std::max(a.lo, b.lo), hi = std::min(a.hi, b.hi);
          if (lo <= hi) pieces.push_back({lo, hi});
        }
    }
    if (pieces.empty()) continue;
    lab.seen = true;

    if (bx && f.contains(*bx)) {
      // The source sits on this arc; it spans at least the interior
      // half-plane of its own edge.
      lab.owns = true;
      continue;
    }

    std::sort(pieces.begin(), pieces.end());
    std::vector<std::pair<Key, Key>> m2;
    for (auto& pc : pieces) {
      if (!m2.empty() && pc.first <= m2.back().second) {
        if (pc.second > m2.back().second) m2.back().second = pc.second;
      } else {
        m2.push_back(pc);
      }
    }
    // Re-glue across vertex 0 if the arc wraps.
    if (m2.size() >= 2 && m2.front().first == Key{0, Rat(0)} &&
        m2.back().second == end) {
      m2.front().first = m2.back().first;
      m2.pop_back();
    }
    // Order pieces along the arc starting from f.a, then take the angular
    // span from the first visible point to the last.
    Key fa = f.kind == BoundaryArc::Kind::Whole ? Key{0, Rat(0)} : key_of(f.a);
    auto rank = [&fa, &end](const Key& k) {
      Key kk = k == end ? Key{0, Rat(0)} : k;
      return std::pair<int, Key>{kk >= fa ? 0 : 1, kk};
    };
    auto first = m2.begin(), last = m2.begin();
    for (auto it2 = m2.begin(); it2 != m2.end(); ++it2) {
      if (rank(it2->first) < rank(first->first)) first = it2;
      if (rank(it2->second) > rank(last->second)) last = it2;
    }
    if (f.kind == BoundaryArc::Kind::Whole && m2.size() == 1 &&
        m2.front().first == Key{0, Rat(0)} && m2.front().second == end) {
      lab.owns = true;  // sees the entire boundary
      continue;
    }
    Point2 s = boundary_position(p, key_to_bp(p, first->first)) - vb.source;
    Point2 e = boundary_position(p, key_to_bp(p, last->second)) - vb.source;
    Rat cr = cross(s, e);
    lab.owns = sgn(cr) < 0 || (sgn(cr) == 0 && sgn(dot(s, e)) <= 0);
  }

  for (const Tangency& tg : vb.tangents) {
    int fi = tile_at(arcs, tg.at, tg.left);
    if (fi < 0 || !labels[fi].seen) continue;
    if (tg.left)
      labels[fi].left_tangent = true;
    else
      labels[fi].right_tangent = true;
  }
  return labels;
}

}  // namespace guarding
