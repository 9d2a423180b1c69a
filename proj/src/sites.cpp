#include "guarding/sites.hpp"

#include <algorithm>

namespace guarding {

SiteSet SiteSet::vertices(const SimplePolygon& p) {
  SiteSet s;
  for (int i = 0; i < p.size(); ++i)
    s.sites_.push_back({i, BoundaryPoint{i, Rat(0)}, p.vertex(i)});
  return s;
}

SiteSet SiteSet::from_points(const SimplePolygon& p,
                             const std::vector<Point2>& points) {
  std::vector<BoundaryPoint> bps;
  bps.reserve(points.size());
  for (const Point2& q : points) {
    auto bp = locate_on_boundary(p, q);
    if (!bp) throw SiteError("guard site not on the boundary");
    bps.push_back(*bp);
  }
  std::sort(bps.begin(), bps.end(), boundary_less);
  for (std::size_t i = 1; i < bps.size(); ++i)
    if (bps[i] == bps[i - 1]) throw SiteError("duplicate guard site");
  // Every vertex must be present so fragment endpoints always have a site.
  std::size_t vi = 0;
  for (const BoundaryPoint& b : bps)
    if (sgn(b.t) == 0 && b.edge == static_cast<int>(vi)) ++vi;
  if (vi != static_cast<std::size_t>(p.size()))
    throw SiteError("guard sites must include every polygon vertex");
  SiteSet s;
  for (std::size_t i = 0; i < bps.size(); ++i)
    s.sites_.push_back({static_cast<int>(i), bps[i],
                        boundary_position(p, bps[i])});
  return s;
}

std::vector<int> SiteSet::ids_on_arc(const BoundaryArc& arc) const {
  std::vector<int> out;
  for (const GuardSite& g : sites_)
    if (arc.contains(g.where)) out.push_back(g.id);
  return out;
}

WeightState::WeightState(int n) : z_(n, 0), prefix_(n + 1) {
  rebuild(0);
}

void WeightState::set_exponent(int id, long z) {
  z_[id] = z;
  rebuild(id);
}

Int WeightState::weight(int id) const {
  return pow2(static_cast<unsigned long>(z_[id]));
}

int WeightState::site_at(const Rat& c) const {
  if (sgn(c) < 0 || c >= Rat(total_))
    throw std::invalid_argument("site_at: cumulative weight out of range");
  int lo = 0, hi = size() - 1;
  while (lo < hi) {
    int mid = (lo + hi + 1) / 2;
    if (Rat(prefix_[mid]) <= c)
      lo = mid;
    else
      hi = mid - 1;
  }
  return lo;
}

void WeightState::double_at(const std::vector<int>& ids) {
  int first = size();
  for (int id : ids) {
    ++z_[id];
    first = std::min(first, id);
  }
  ++doublings_;
  rebuild(first);
}

void WeightState::rebuild(int from) {
  if (from == 0) prefix_[0] = 0;
  for (int i = from; i < size(); ++i)
    prefix_[i + 1] = prefix_[i] + weight(i);
  total_ = prefix_[size()];
}

}  // namespace guarding
