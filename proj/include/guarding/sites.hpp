#pragma once

#include <vector>

#include "guarding/polygon.hpp"

namespace guarding {

struct SiteError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One candidate guard location on the boundary.
struct GuardSite {
  int id;             // position in perimeter order, starting at vertex 0
  BoundaryPoint where;
  Point2 pos;
};

// The finite guard ground set, sorted along the boundary.  Every polygon
// vertex must be a site; extra sites may sit anywhere on the boundary.
class SiteSet {
 public:
  static SiteSet vertices(const SimplePolygon& p);
  // points: arbitrary boundary points, must include all vertices exactly once.
  static SiteSet from_points(const SimplePolygon& p,
                             const std::vector<Point2>& points);

  int size() const { return static_cast<int>(sites_.size()); }
  const GuardSite& site(int id) const { return sites_[id]; }
  const std::vector<GuardSite>& all() const { return sites_; }

  // Sites whose boundary point lies on the closed arc, in id order.
  std::vector<int> ids_on_arc(const BoundaryArc& arc) const;

 private:
  std::vector<GuardSite> sites_;
};

// Multiplicative weights over the sites.  Every weight is 2^z for a per-site
// exponent z, so doubling never leaves the integers and all bookkeeping is
// exact.
class WeightState {
 public:
  explicit WeightState(int n);  // uniform: every exponent 0

  int size() const { return static_cast<int>(z_.size()); }
  long exponent(int id) const { return z_[id]; }
  void set_exponent(int id, long z);
  Int weight(int id) const;
  const Int& total() const { return total_; }

  // Cumulative weight of sites with id < given id.
  const Int& prefix(int id) const { return prefix_[id]; }

  // The unique site whose half-open cumulative span [prefix, prefix+weight)
  // contains c; requires 0 <= c < total.
  int site_at(const Rat& c) const;

  void double_at(const std::vector<int>& ids);
  long doublings() const { return doublings_; }

 private:
  void rebuild(int from);
  std::vector<long> z_;
  std::vector<Int> prefix_;  // size n+1
  Int total_;
  long doublings_ = 0;
};

}  // namespace guarding
