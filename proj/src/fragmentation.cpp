#include "guarding/fragmentation.hpp"

namespace guarding {

namespace {

Rat rat_pow2(long e) {
  if (e >= 0) return Rat(pow2(static_cast<unsigned long>(e)));
  return Rat(Int(1), pow2(static_cast<unsigned long>(-e)));
}

Fragment make_fragment(const SiteSet& sites, const WeightState& weights,
                       Rat lo, Rat hi) {
  Fragment f;
  int first = weights.site_at(lo);
  Rat hi_mod = hi == Rat(weights.total()) ? Rat(0) : hi;
  int last = weights.site_at(hi_mod);
  f.first_site = first;
  f.last_site = last;
  f.extent = BoundaryArc::span(sites.site(first).where, sites.site(last).where);
  f.lo = std::move(lo);
  f.hi = std::move(hi);
  return f;
}

}  // namespace

std::vector<Fragment> equal_weight_fragments(const SiteSet& sites,
                                             const WeightState& weights,
                                             long m) {
  if (m < 1) throw std::invalid_argument("fragment count must be positive");
  std::vector<Fragment> out;
  out.reserve(m);
  Rat W(weights.total());
  if (m == 1) {
    Fragment f = make_fragment(sites, weights, Rat(0), W);
    f.extent = BoundaryArc::whole();
    out.push_back(std::move(f));
    return out;
  }
  for (long j = 0; j < m; ++j)
    out.push_back(make_fragment(sites, weights, Rat(j) * W / m,
                                Rat(j + 1) * W / m));
  return out;
}

std::vector<Fragment> split_fragment(const SiteSet& sites,
                                     const WeightState& weights,
                                     const Fragment& f, long b) {
  if (b < 1) throw std::invalid_argument("branch count must be positive");
  std::vector<Fragment> out;
  out.reserve(b);
  Rat span = f.hi - f.lo;
  for (long j = 0; j < b; ++j)
    out.push_back(make_fragment(sites, weights, f.lo + Rat(j) * span / b,
                                f.lo + Rat(j + 1) * span / b));
  return out;
}

BoundaryArc complement_fragment(const Fragment& f) {
  switch (f.extent.kind) {
    case BoundaryArc::Kind::Whole:
      return BoundaryArc::empty();
    case BoundaryArc::Kind::Empty:
      return BoundaryArc::whole();
    case BoundaryArc::Kind::Span:
      return BoundaryArc::span(f.extent.b, f.extent.a);
  }
  return BoundaryArc::empty();
}

NetParams net_params(const Rat& epsilon) {
  if (sgn(epsilon) <= 0 || epsilon > 1)
    throw NetParamError("epsilon must lie in (0, 1]");
  NetParams np;
  np.epsilon = epsilon;
  np.inv_eps = 1 / epsilon;

  long L = np.inv_eps > 1 ? ceil_log2(np.inv_eps) : 0;  // 2^L >= 1/eps
  long t = 1;
  while (pow2(static_cast<unsigned long>(t)) < L) ++t;  // 2^t >= L
  np.t = t;

  // Correction factor alpha = ceil(N)/D keeps every branching count an even
  // integer while the level products still reach 4t/eps.
  Rat N = Rat(4 * t) * np.inv_eps * rat_pow2(1 - t - (1L << (t - 1)));
  Rat D = Rat(4 * t) * rat_pow2((1L << (t - 1)) + 1 - t);
  Int ceilN;
  mpz_cdiv_q(ceilN.get_mpz_t(), N.get_num().get_mpz_t(), N.get_den().get_mpz_t());
  np.alpha = Rat(ceilN) / D;
  np.alpha.canonicalize();
  if (np.alpha > 1) throw NetParamError("alpha exceeded 1");

  np.b.push_back(2 * ceilN.get_si());
  for (long i = 2; i <= t; ++i)
    np.b.push_back((1L << ((1L << (t - i)) + 1)));
  Int prod(1);
  for (long bi : np.b) {
    prod *= bi;
    np.f.push_back(prod);
  }
  if (Rat(np.f.back()) < Rat(4 * t) * np.inv_eps)
    throw NetParamError("level products fall short of 4t/eps");
  np.quadratic_fallback = np.inv_eps <= 16;
  return np;
}

FragTree build_hierarchy(const SiteSet& sites, const WeightState& weights,
                         const NetParams& params) {
  FragTree tree;
  tree.params = params;
  Fragment root = equal_weight_fragments(sites, weights, 1)[0];
  tree.nodes.push_back({root, 0, -1, {}});
  tree.levels.push_back({0});
  for (long level = 1; level <= params.t; ++level) {
    std::vector<int> ids;
    for (int pid : tree.levels[level - 1]) {
      std::vector<Fragment> kids =
          split_fragment(sites, weights, tree.nodes[pid].frag,
                         params.b[level - 1]);
      for (Fragment& k : kids) {
        int id = static_cast<int>(tree.nodes.size());
        tree.nodes.push_back({std::move(k), static_cast<int>(level), pid, {}});
        tree.nodes[pid].kids.push_back(id);
        ids.push_back(id);
      }
    }
    tree.levels.push_back(std::move(ids));
  }
  return tree;
}

}  // namespace guarding
