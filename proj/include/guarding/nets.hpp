#pragma once

#include <memory>

#include "guarding/fragmentation.hpp"
#include "guarding/visibility.hpp"

namespace guarding {

struct GuardSet {
  std::vector<int> ids;  // sorted, unique site ids
};

// Memoized per-site angular sweeps.  Lazy lookups are single-threaded; call
// warm() first when reading from parallel code.
class VisCache {
 public:
  VisCache(const SimplePolygon& p, const SiteSet& sites)
      : poly_(&p), sites_(&sites), entries_(sites.size()) {}

  const VisibleBoundary& get(int id);
  bool has(int id) const { return entries_[id] != nullptr; }
  void warm(const std::vector<int>& ids, bool parallel);
  const SimplePolygon& poly() const { return *poly_; }
  const SiteSet& sites() const { return *sites_; }
  long computed() const;

 private:
  const SimplePolygon* poly_;
  const SiteSet* sites_;
  std::vector<std::unique_ptr<VisibleBoundary>> entries_;
};

// Site ids inside the fragment's extent, ordered along the boundary starting
// from the fragment's first site.
std::vector<int> fragment_site_ids(const SiteSet& sites, const Fragment& f);

struct ExtremalPair {
  int first = -1, last = -1;  // -1: no site of the fragment sees the target
};

// First and last site of fragment `a` (in its own traversal order) weakly
// seeing the target arc.
ExtremalPair extremal_guards(VisCache& cache, const Fragment& a,
                             const BoundaryArc& target);
ExtremalPair extremal_guards(VisCache& cache, const std::vector<int>& a_ids,
                             const BoundaryArc& target);

struct QuadraticNet {
  GuardSet guards;
  long m = 0;  // fragment count
  std::vector<Fragment> fragments;
  long pair_guards = 0;      // distinct sites contributed by extremal pairs
  long endpoint_guards = 0;  // distinct fragment endpoint sites
  Int bound;                 // 4*C(m,2) + m
};

// Flat construction: m = ceil(4/eps) equal-weight fragments, four extremal
// guards per fragment pair, plus every fragment endpoint.
QuadraticNet build_quadratic_net(VisCache& cache, const SiteSet& sites,
                                 const WeightState& weights, const Rat& epsilon,
                                 bool parallel = false);

struct HierarchicalNet {
  GuardSet guards;
  FragTree tree;
  long pair_guards = 0;
  long endpoint_guards = 0;
  Int bound;  // 4 * sum C(b_i+1,2) f_{i-1} + sum f_i
};

// Multi-level construction: every node pairs its children with each other
// and with the node's complement, plus all fragment endpoints at all levels.
HierarchicalNet build_hierarchical_net(VisCache& cache, const SiteSet& sites,
                                       const WeightState& weights,
                                       const NetParams& params,
                                       bool parallel = false);

// Baseline: weighted random draws, sample count scaling with
// (1/eps) * log(1/eps).  Deterministic for a fixed seed.
GuardSet random_comparator_net(const SiteSet& sites, const WeightState& weights,
                               const Rat& epsilon, unsigned long seed);

}  // namespace guarding
