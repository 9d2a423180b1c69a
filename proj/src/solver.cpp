#include "guarding/solver.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>

#include "guarding/kernels.hpp"
#include "guarding/triangulate.hpp"

namespace guarding {

long phase_budget(long cprime, long guard_count) {
  if (cprime <= 0 || guard_count <= 0)
    throw std::invalid_argument("phase_budget: positive arguments required");
  if (cprime >= guard_count) return 1;  // log term <= 0, clamp
  unsigned long e = static_cast<unsigned long>(4 * cprime);
  Rat ratio(ipow(Int(guard_count), e), ipow(Int(cprime), e));
  ratio.canonicalize();
  long b = ceil_log2(ratio);
  return b < 1 ? 1 : b;
}

std::vector<int> sites_seeing(const SimplePolygon& p, const SiteSet& sites,
                              const Point2& x) {
  VisibleBoundary vb = visible_boundary(p, x);
  std::vector<int> out;
  for (const GuardSite& g : sites.all())
    for (const VisItem& it : vb.items)
      if (it.arc.contains(g.where)) {
        out.push_back(g.id);
        break;
      }
  return out;
}

namespace {

GuardSet build_net(VisCache& cache, const SiteSet& sites,
                   const WeightState& weights, const Rat& eps,
                   const SolveOptions& options) {
  switch (options.strategy) {
    case Strategy::Random:
      return random_comparator_net(sites, weights, eps, options.seed);
    case Strategy::Quadratic:
      return build_quadratic_net(cache, sites, weights, eps, options.parallel)
          .guards;
    case Strategy::Hierarchical:
      return build_hierarchical_net(cache, sites, weights, net_params(eps),
                                    options.parallel)
          .guards;
    case Strategy::Auto: {
      NetParams np = net_params(eps);
      if (np.quadratic_fallback)
        return build_quadratic_net(cache, sites, weights, eps, options.parallel)
            .guards;
      return build_hierarchical_net(cache, sites, weights, np, options.parallel)
          .guards;
    }
  }
  throw std::logic_error("unknown strategy");
}

std::vector<VisibleBoundary> collect_regions(VisCache& cache,
                                             const std::vector<int>& ids,
                                             bool parallel) {
  cache.warm(ids, parallel);
  std::vector<VisibleBoundary> regions;
  regions.reserve(ids.size());
  for (int id : ids) regions.push_back(cache.get(id));
  return regions;
}

CoverageResult verify_cover(const SimplePolygon& p,
                            const std::vector<VisibleBoundary>& regions,
                            const SolveOptions& options) {
  if (options.targets) return uncovered_witness(p, regions, *options.targets);
  return uncovered_witness(p, regions);
}

}  // namespace

SolveResult bg_solve(const SimplePolygon& p, const SiteSet& sites,
                     const SolveOptions& options) {
  const long G = sites.size();
  if (options.targets)
    for (const Point2& q : *options.targets)
      if (p.locate(q) == Location::Exterior)
        throw PointOutside("target point outside polygon");

  VisCache cache(p, sites);
  SolveResult res;
  bool feasibility_checked = false;
  long cprime = std::max(1, options.cprime0);

  for (;;) {
    if (cprime >= G && !feasibility_checked) {
      std::vector<int> all(G);
      for (long i = 0; i < G; ++i) all[i] = static_cast<int>(i);
      CoverageResult cov =
          verify_cover(p, collect_regions(cache, all, options.parallel), options);
      if (!cov.covered) {
        res.status = SolveResult::Status::Infeasible;
        res.infeasible_witness = cov.witness;
        return res;
      }
      feasibility_checked = true;
    }

    Rat eps(1, 2 * cprime);
    eps.canonicalize();
    WeightState weights(static_cast<int>(G));
    PhaseLog log;
    log.cprime = static_cast<int>(cprime);
    log.budget = phase_budget(cprime, G);
    bool phase_covered = false;

    for (;;) {
      GuardSet net = build_net(cache, sites, weights, eps, options);
      log.net_size = static_cast<long>(net.ids.size());
      CoverageResult cov = verify_cover(
          p, collect_regions(cache, net.ids, options.parallel), options);
      if (cov.covered) {
        phase_covered = true;
        log.covered = true;
        res.cover = std::move(net);
        break;
      }
      std::vector<int> seeing = sites_seeing(p, sites, *cov.witness);
      if (seeing.empty()) {
        res.status = SolveResult::Status::Infeasible;
        res.infeasible_witness = cov.witness;
        res.phases.push_back(log);
        return res;
      }
      if (log.doublings == log.budget) break;
      weights.double_at(seeing);
      ++log.doublings;
      res.transcript.push_back(
          {static_cast<int>(cprime), *cov.witness, std::move(seeing)});
    }

    res.phases.push_back(log);
    if (phase_covered) {
      res.status = SolveResult::Status::Covered;
      return res;
    }
    if (cprime >= G)
      throw std::logic_error("budgeted phase failed with cprime >= |G|");
    cprime = std::min(2 * cprime, G);
  }
}

GreedyResult greedy_cover(const SimplePolygon& p, const SiteSet& sites,
                          const std::vector<Point2>& targets, bool parallel) {
  for (const Point2& q : targets)
    if (p.locate(q) == Location::Exterior)
      throw PointOutside("target point outside polygon");
  const std::size_t G = sites.size(), T = targets.size();
  std::vector<Point2> gpts;
  gpts.reserve(G);
  for (const GuardSite& g : sites.all()) gpts.push_back(g.pos);
  std::vector<std::uint8_t> mat = parallel
                                      ? sees_matrix_parallel(p, gpts, targets)
                                      : sees_matrix_serial(p, gpts, targets);
  GreedyResult res;
  std::vector<char> covered(T, 0);
  std::size_t left = T;
  while (left > 0) {
    std::size_t best = 0, best_gain = 0;
    for (std::size_t i = 0; i < G; ++i) {
      std::size_t gain = 0;
      for (std::size_t j = 0; j < T; ++j)
        if (!covered[j] && mat[i * T + j]) ++gain;
      if (gain > best_gain) {
        best_gain = gain;
        best = i;
      }
    }
    if (best_gain == 0) {
      for (std::size_t j = 0; j < T; ++j)
        if (!covered[j]) {
          res.uncovered = targets[j];
          break;
        }
      return res;
    }
    res.pick_order.push_back(static_cast<int>(best));
    for (std::size_t j = 0; j < T; ++j)
      if (!covered[j] && mat[best * T + j]) {
        covered[j] = 1;
        --left;
      }
  }
  res.covered = true;
  res.cover.ids = res.pick_order;
  std::sort(res.cover.ids.begin(), res.cover.ids.end());
  return res;
}

OptResult brute_force_opt(const SimplePolygon& p, const SiteSet& sites,
                          const std::vector<Point2>& targets, int site_limit) {
  const int G = sites.size();
  if (G > site_limit)
    throw OptLimitExceeded("site count " + std::to_string(G) +
                           " exceeds brute-force limit " +
                           std::to_string(site_limit));
  const std::size_t T = targets.size();
  const std::size_t words = (T + 63) / 64;
  auto full = std::vector<std::uint64_t>(words, ~std::uint64_t(0));
  if (T % 64 != 0 && words > 0)
    full[words - 1] = (std::uint64_t(1) << (T % 64)) - 1;

  std::vector<std::vector<std::uint64_t>> rows(G,
                                               std::vector<std::uint64_t>(words, 0));
  for (int i = 0; i < G; ++i)
    for (std::size_t j = 0; j < T; ++j)
      if (sees(p, sites.site(i).pos, targets[j]))
        rows[i][j / 64] |= std::uint64_t(1) << (j % 64);

  auto is_full = [&](const std::vector<std::uint64_t>& u) {
    for (std::size_t w = 0; w < words; ++w)
      if (u[w] != full[w]) return false;
    return true;
  };

  std::vector<std::uint64_t> all_union(words, 0);
  for (int i = 0; i < G; ++i)
    for (std::size_t w = 0; w < words; ++w) all_union[w] |= rows[i][w];
  OptResult res;
  if (!is_full(all_union)) {
    for (std::size_t j = 0; j < T; ++j)
      if (!(all_union[j / 64] >> (j % 64) & 1)) {
        res.uncovered = targets[j];
        break;
      }
    return res;
  }

  // Suffix unions let the search cut branches that cannot finish the job.
  std::vector<std::vector<std::uint64_t>> suffix(
      G + 1, std::vector<std::uint64_t>(words, 0));
  for (int i = G - 1; i >= 0; --i) {
    suffix[i] = suffix[i + 1];
    for (std::size_t w = 0; w < words; ++w) suffix[i][w] |= rows[i][w];
  }

  std::vector<int> chosen;
  std::vector<std::uint64_t> u(words, 0);
  for (int k = 0; k <= G; ++k) {
    chosen.clear();
    std::fill(u.begin(), u.end(), 0);
    // Lexicographic DFS over id-increasing k-subsets.
    std::function<bool(int, int)> dfs = [&](int from, int need) -> bool {
      if (need == 0) return is_full(u);
      for (int i = from; i + need <= G; ++i) {
        std::vector<std::uint64_t> nu(words);
        bool can = true;
        for (std::size_t w = 0; w < words; ++w) {
          nu[w] = u[w] | rows[i][w];
        }
        // Even with every later site the branch must still reach full
        // coverage, else cut it.
        for (std::size_t w = 0; w < words; ++w)
          if (((nu[w] | suffix[i + 1][w]) & full[w]) != full[w]) {
            can = false;
            break;
          }
        if (!can) continue;
        std::vector<std::uint64_t> saved = u;
        u = nu;
        chosen.push_back(i);
        if (dfs(i + 1, need - 1)) return true;
        chosen.pop_back();
        u = saved;
      }
      return false;
    };
    if (dfs(0, k)) {
      res.feasible = true;
      res.opt = k;
      res.cover.ids = chosen;
      return res;
    }
  }
  throw std::logic_error("brute_force_opt: search exhausted unexpectedly");
}

std::vector<Point2> discretize_targets(const SimplePolygon& p, long density) {
  if (density < 1) throw std::invalid_argument("density must be positive");
  std::vector<Triangle> base = triangulate(p);
  auto norm = [](Triangle t) {
    std::sort(t.begin(), t.end(), lex_less);
    return t;
  };
  auto tri_less = [&](const Triangle& a, const Triangle& b) {
    Triangle x = norm(a), y = norm(b);
    for (int i = 0; i < 3; ++i) {
      if (lex_less(x[i], y[i])) return true;
      if (lex_less(y[i], x[i])) return false;
    }
    return false;
  };
  std::vector<Point2> out;
  for (const Triangle& t0 : base) {
    std::vector<Triangle> pieces{t0};
    while (static_cast<long>(pieces.size()) < density) {
      std::size_t pick = 0;
      for (std::size_t i = 1; i < pieces.size(); ++i) {
        Rat ai = triangle_area2(pieces[i]), ap = triangle_area2(pieces[pick]);
        if (ai > ap || (ai == ap && tri_less(pieces[i], pieces[pick])))
          pick = i;
      }
      Triangle t = norm(pieces[pick]);
      // Median from the lexicographically least corner.
      Point2 v = t[0];
      Point2 mid{(t[1].x + t[2].x) / 2, (t[1].y + t[2].y) / 2};
      Triangle c1{v, t[1], mid}, c2{v, mid, t[2]};
      pieces[pick] = c1;
      pieces.insert(pieces.begin() + pick + 1, c2);
    }
    for (const Triangle& t : pieces) out.push_back(triangle_centroid(t));
  }
  // Drop exact duplicates, keeping first occurrences.
  std::vector<Point2> ded;
  for (const Point2& q : out) {
    bool dup = false;
    for (const Point2& r : ded)
      if (q == r) {
        dup = true;
        break;
      }
    if (!dup) ded.push_back(q);
  }
  return ded;
}

}  // namespace guarding
