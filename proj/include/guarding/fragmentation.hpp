#pragma once

#include "guarding/sites.hpp"

namespace guarding {

// A fragment is a half-open interval of cumulative site weight; its
// geometric extent runs from the site holding the low end to the site
// holding the high end, so adjacent fragments share their endpoint site.
struct Fragment {
  Rat lo, hi;                 // 0 <= lo < hi <= total weight
  int first_site, last_site;  // shared with the neighbours
  BoundaryArc extent;
};

// Splits total weight into m equal parts; fragment j covers
// [j*W/m, (j+1)*W/m).  m == 1 yields the whole boundary.
std::vector<Fragment> equal_weight_fragments(const SiteSet& sites,
                                             const WeightState& weights,
                                             long m);

// Split one fragment into b equal-weight children.
std::vector<Fragment> split_fragment(const SiteSet& sites,
                                     const WeightState& weights,
                                     const Fragment& f, long b);

// Everything outside the fragment, as a closed arc sharing its endpoints.
BoundaryArc complement_fragment(const Fragment& f);

struct NetParamError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Shape parameters of the fragment hierarchy for a given epsilon.
struct NetParams {
  Rat epsilon;
  Rat inv_eps;          // 1/epsilon
  long t = 0;           // number of levels; least t with 2^(2^t) >= 1/eps
  Rat alpha;            // correction factor in (0, 1]
  std::vector<long> b;  // branching b_1..b_t (b[0] is the top split)
  std::vector<Int> f;   // cumulative products f_1..f_t
  bool quadratic_fallback = false;  // 1/eps <= 16: use the flat net instead
};

NetParams net_params(const Rat& epsilon);

struct FragNode {
  Fragment frag;
  int level;   // 0 = root (whole boundary)
  int parent;  // -1 for root
  std::vector<int> kids;
};

struct FragTree {
  NetParams params;
  std::vector<FragNode> nodes;
  std::vector<std::vector<int>> levels;  // levels[i] = node ids at depth i
};

// Builds the full t-level hierarchy: the root splits into b_1 fragments,
// every level-i node into b_{i+1} children.
FragTree build_hierarchy(const SiteSet& sites, const WeightState& weights,
                         const NetParams& params);

}  // namespace guarding
