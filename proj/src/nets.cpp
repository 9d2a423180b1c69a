#include "guarding/nets.hpp"

#include <algorithm>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace guarding {

const VisibleBoundary& VisCache::get(int id) {
  if (!entries_[id])
    entries_[id] = std::make_unique<VisibleBoundary>(
        visible_boundary(*poly_, sites_->site(id).pos));
  return *entries_[id];
}

void VisCache::warm(const std::vector<int>& ids, bool parallel) {
  std::vector<int> todo;
  for (int id : ids)
    if (!entries_[id]) todo.push_back(id);
  std::sort(todo.begin(), todo.end());
  todo.erase(std::unique(todo.begin(), todo.end()), todo.end());
  if (parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < static_cast<long>(todo.size()); ++i) {
      int id = todo[i];
      entries_[id] = std::make_unique<VisibleBoundary>(
          visible_boundary(*poly_, sites_->site(id).pos));
    }
  } else {
    for (int id : todo)
      entries_[id] = std::make_unique<VisibleBoundary>(
          visible_boundary(*poly_, sites_->site(id).pos));
  }
}

long VisCache::computed() const {
  long c = 0;
  for (const auto& e : entries_)
    if (e) ++c;
  return c;
}

std::vector<int> fragment_site_ids(const SiteSet& sites, const Fragment& f) {
  std::vector<int> ids = sites.ids_on_arc(f.extent);
  // Rotate so the list starts at the fragment's first site and follows the
  // fragment's own traversal order.
  auto it = std::find(ids.begin(), ids.end(), f.first_site);
  if (it != ids.end()) std::rotate(ids.begin(), it, ids.end());
  return ids;
}

ExtremalPair extremal_guards(VisCache& cache, const std::vector<int>& a_ids,
                             const BoundaryArc& target) {
  ExtremalPair out;
  if (target.kind == BoundaryArc::Kind::Empty) return out;
  for (int id : a_ids) {
    if (weakly_sees_arc(cache.get(id), target)) {
      out.first = id;
      break;
    }
  }
  if (out.first < 0) return out;
  for (auto it = a_ids.rbegin(); it != a_ids.rend(); ++it) {
    if (weakly_sees_arc(cache.get(*it), target)) {
      out.last = *it;
      break;
    }
  }
  return out;
}

ExtremalPair extremal_guards(VisCache& cache, const Fragment& a,
                             const BoundaryArc& target) {
  return extremal_guards(cache, fragment_site_ids(cache.sites(), a), target);
}

namespace {

void insert_pair(std::set<int>& into, const ExtremalPair& p) {
  if (p.first >= 0) into.insert(p.first);
  if (p.last >= 0) into.insert(p.last);
}

struct PairTask {
  const std::vector<int>* a_ids;
  const BoundaryArc* target;
};

// Runs the directed extremal scans for a list of (fragment, target) tasks.
std::vector<ExtremalPair> run_pair_tasks(VisCache& cache,
                                         const std::vector<PairTask>& tasks,
                                         bool parallel) {
  std::vector<ExtremalPair> results(tasks.size());
  if (parallel) {
    // Warm every site the scans may touch, then read the cache lock-free.
    std::vector<int> all;
    for (const PairTask& t : tasks)
      all.insert(all.end(), t.a_ids->begin(), t.a_ids->end());
    cache.warm(all, true);
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < static_cast<long>(tasks.size()); ++i)
      results[i] = extremal_guards(cache, *tasks[i].a_ids, *tasks[i].target);
  } else {
    for (std::size_t i = 0; i < tasks.size(); ++i)
      results[i] = extremal_guards(cache, *tasks[i].a_ids, *tasks[i].target);
  }
  return results;
}

}  // namespace

QuadraticNet build_quadratic_net(VisCache& cache, const SiteSet& sites,
                                 const WeightState& weights, const Rat& epsilon,
                                 bool parallel) {
  QuadraticNet net;
  Rat m_rat = 4 / epsilon;
  Int m_ceil;
  mpz_cdiv_q(m_ceil.get_mpz_t(), m_rat.get_num().get_mpz_t(),
             m_rat.get_den().get_mpz_t());
  net.m = m_ceil.get_si();
  if (net.m < 1) net.m = 1;
  net.fragments = equal_weight_fragments(sites, weights, net.m);
  long m = net.m;
  net.bound = Int(4) * (Int(m) * (m - 1) / 2) + m;

  std::vector<std::vector<int>> frag_ids(m);
  for (long i = 0; i < m; ++i)
    frag_ids[i] = fragment_site_ids(sites, net.fragments[i]);

  std::vector<PairTask> tasks;
  for (long i = 0; i < m; ++i)
    for (long j = i + 1; j < m; ++j) {
      tasks.push_back({&frag_ids[i], &net.fragments[j].extent});
      tasks.push_back({&frag_ids[j], &net.fragments[i].extent});
    }
  std::vector<ExtremalPair> results = run_pair_tasks(cache, tasks, parallel);

  std::set<int> pair_set;
  for (const ExtremalPair& r : results) insert_pair(pair_set, r);
  std::set<int> endpoint_set;
  for (const Fragment& f : net.fragments) {
    endpoint_set.insert(f.first_site);
    endpoint_set.insert(f.last_site);
  }
  net.pair_guards = static_cast<long>(pair_set.size());
  net.endpoint_guards = static_cast<long>(endpoint_set.size());
  std::set<int> all(pair_set);
  all.insert(endpoint_set.begin(), endpoint_set.end());
  net.guards.ids.assign(all.begin(), all.end());
  return net;
}

HierarchicalNet build_hierarchical_net(VisCache& cache, const SiteSet& sites,
                                       const WeightState& weights,
                                       const NetParams& params, bool parallel) {
  HierarchicalNet net;
  net.tree = build_hierarchy(sites, weights, params);
  const FragTree& tree = net.tree;

  std::vector<std::vector<int>> node_ids(tree.nodes.size());
  for (std::size_t i = 0; i < tree.nodes.size(); ++i)
    node_ids[i] = fragment_site_ids(sites, tree.nodes[i].frag);

  // Every internal node pairs its children with each other and with the
  // node's complement; complements only donate and receive guards, they are
  // not fragments of the hierarchy.
  std::vector<BoundaryArc> complements(tree.nodes.size());
  std::vector<std::vector<int>> comp_ids(tree.nodes.size());
  for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
    complements[i] = complement_fragment(tree.nodes[i].frag);
    if (!tree.nodes[i].kids.empty() &&
        complements[i].kind != BoundaryArc::Kind::Empty)
      comp_ids[i] = sites.ids_on_arc(complements[i]);
  }

  std::vector<PairTask> tasks;
  for (std::size_t v = 0; v < tree.nodes.size(); ++v) {
    const std::vector<int>& kids = tree.nodes[v].kids;
    if (kids.empty()) continue;
    for (std::size_t a = 0; a < kids.size(); ++a) {
      for (std::size_t b = a + 1; b < kids.size(); ++b) {
        tasks.push_back({&node_ids[kids[a]], &tree.nodes[kids[b]].frag.extent});
        tasks.push_back({&node_ids[kids[b]], &tree.nodes[kids[a]].frag.extent});
      }
      if (complements[v].kind != BoundaryArc::Kind::Empty) {
        tasks.push_back({&node_ids[kids[a]], &complements[v]});
        tasks.push_back({&comp_ids[v], &tree.nodes[kids[a]].frag.extent});
      }
    }
  }
  std::vector<ExtremalPair> results = run_pair_tasks(cache, tasks, parallel);

  std::set<int> pair_set;
  for (const ExtremalPair& r : results) insert_pair(pair_set, r);
  std::set<int> endpoint_set;
  for (std::size_t i = 1; i < tree.nodes.size(); ++i) {  // skip the root
    endpoint_set.insert(tree.nodes[i].frag.first_site);
    endpoint_set.insert(tree.nodes[i].frag.last_site);
  }
  net.pair_guards = static_cast<long>(pair_set.size());
  net.endpoint_guards = static_cast<long>(endpoint_set.size());
  std::set<int> all(pair_set);
  all.insert(endpoint_set.begin(), endpoint_set.end());
  net.guards.ids.assign(all.begin(), all.end());

  Int bound(0);
  Int f_prev(1);
  for (long i = 0; i < params.t; ++i) {
    long bi = params.b[i];
    bound += Int(4) * (Int(bi + 1) * bi / 2) * f_prev;
    f_prev = params.f[i];
    bound += f_prev;
  }
  net.bound = bound;
  return net;
}

GuardSet random_comparator_net(const SiteSet& sites, const WeightState& weights,
                               const Rat& epsilon, unsigned long seed) {
  // Sample count: 8 * ceil(1/eps) * max(1, ceil(log2 ceil(1/eps))).
  Rat inv = 1 / epsilon;
  Int e_ceil;
  mpz_cdiv_q(e_ceil.get_mpz_t(), inv.get_num().get_mpz_t(),
             inv.get_den().get_mpz_t());
  long e = std::max(1L, e_ceil.get_si());
  long lg = std::max(1L, ceil_log2(Rat(e)));
  long draws = 8 * e * lg;

  gmp_randstate_t rng;
  gmp_randinit_mt(rng);
  gmp_randseed_ui(rng, seed);
  std::set<int> picked;
  for (long i = 0; i < draws; ++i) {
    Int r;
    mpz_urandomm(r.get_mpz_t(), rng, weights.total().get_mpz_t());
    picked.insert(weights.site_at(Rat(r)));
  }
  gmp_randclear(rng);
  GuardSet out;
  out.ids.assign(picked.begin(), picked.end());
  return out;
}

}  // namespace guarding
